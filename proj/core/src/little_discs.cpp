#include "opcalc/operads/little_discs.hpp"

#include "opcalc/text_util.hpp"

#include <algorithm>
#include <stdexcept>

namespace opcalc {

void DiscConfig::validate() const {
    if (discs.empty()) throw std::domain_error("disc configuration of arity 0");
    const Rational one(1);
    for (const auto& d : discs) {
        if (!(d.r > Rational(0)) || d.r > one) throw std::domain_error("disc radius outside ]0,1]");
        const Rational room = one - d.r;
        if (d.x * d.x + d.y * d.y > room * room) throw std::domain_error("disc not contained in the unit disc");
    }
    for (std::size_t a = 0; a < discs.size(); ++a)
        for (std::size_t b = a + 1; b < discs.size(); ++b) {
            const Rational dx = discs[a].x - discs[b].x, dy = discs[a].y - discs[b].y;
            const Rational rr = discs[a].r + discs[b].r;
            if (dx * dx + dy * dy < rr * rr) throw std::domain_error("discs with overlapping interiors");
        }
}

DiscConfig LittleDiscs::compose(const Element& x, std::size_t i, const Element& y) const {
    require_input(i, x.arity(), "d2 compose");
    Element out;
    out.discs.insert(out.discs.end(), x.discs.begin(), x.discs.begin() + static_cast<long>(i - 1));
    for (const auto& d : y.discs) out.discs.push_back(x.discs[i - 1].then(d));
    out.discs.insert(out.discs.end(), x.discs.begin() + static_cast<long>(i), x.discs.end());
    return out;
}

DiscConfig LittleDiscs::act(const InjectiveMap& u, const Element& x) const {
    require_arity(u.codomain(), x.arity(), "d2 lambda action");
    Element out;
    for (std::size_t j = 1; j <= u.domain(); ++j) out.discs.push_back(x.discs[u(j) - 1]);
    return out;
}

std::string LittleDiscs::to_string(const Element& x) const {
    std::vector<std::string> parts;
    for (const auto& d : x.discs) parts.push_back(d.x.str() + "," + d.y.str() + "," + d.r.str());
    return "[" + join(parts, ";") + "]";
}

DiscConfig LittleDiscs::parse(const std::string& text) const {
    Element out;
    for (const auto& part : split(strip_brackets(text, '[', ']'), ';')) {
        const auto f = split(part, ',');
        if (f.size() != 3) throw std::invalid_argument("disc '" + part + "' needs x,y,r");
        out.discs.push_back({Rational::parse(f[0]), Rational::parse(f[1]), Rational::parse(f[2])});
    }
    out.validate();
    return out;
}

DiscConfig LittleDiscs::sample(Rng& rng, std::size_t n) const {
    // One disc per cell of a k×k grid on the square [-1/2,1/2]², which lies inside the unit disc.
    long k = 1;
    while (static_cast<std::size_t>(k * k) < n) ++k;
    std::vector<long> cells(static_cast<std::size_t>(k * k));
    for (std::size_t c = 0; c < cells.size(); ++c) cells[c] = static_cast<long>(c);
    std::shuffle(cells.begin(), cells.end(), rng);
    std::uniform_int_distribution<long> shrink(1, 4), jitter(-2, 2);
    Element out;
    const Rational half_cell(1, 2 * k);
    for (std::size_t j = 0; j < n; ++j) {
        const long cx = cells[j] % k, cy = cells[j] / k;
        const Rational ox = Rational(-1, 2) + Rational(2 * cx + 1, 2 * k);
        const Rational oy = Rational(-1, 2) + Rational(2 * cy + 1, 2 * k);
        // radius = half_cell * s/8 with s in 4..7, jitter within the remaining margin
        const Rational r = half_cell * Rational(3 + shrink(rng), 8);
        const Rational margin = half_cell - r;
        const Rational jx = margin * Rational(jitter(rng), 4), jy = margin * Rational(jitter(rng), 4);
        out.discs.push_back({ox + jx, oy + jy, r});
    }
    return out;
}

}  // namespace opcalc
