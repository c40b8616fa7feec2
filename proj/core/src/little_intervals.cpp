#include "opcalc/operads/little_intervals.hpp"

#include "opcalc/text_util.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opcalc {

void IntervalConfig::validate() const {
    if (intervals.empty()) throw std::domain_error("interval configuration of arity 0");
    for (const auto& iv : intervals) {
        if (!(iv.lo < iv.hi)) throw std::domain_error("interval with c(0) >= c(1)");
        if (iv.lo < Rational(0) || iv.hi > Rational(1)) throw std::domain_error("interval outside [0,1]");
    }
    auto sorted = intervals;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k].lo < sorted[k - 1].hi) throw std::domain_error("intervals with overlapping interiors");
}

IntervalConfig LittleIntervals::compose(const Element& x, std::size_t i, const Element& y) const {
    require_input(i, x.arity(), "d1 compose");
    Element out;
    out.intervals.reserve(x.arity() + y.arity() - 1);
    out.intervals.insert(out.intervals.end(), x.intervals.begin(), x.intervals.begin() + static_cast<long>(i - 1));
    for (const auto& iv : y.intervals) out.intervals.push_back(x.intervals[i - 1].then(iv));
    out.intervals.insert(out.intervals.end(), x.intervals.begin() + static_cast<long>(i), x.intervals.end());
    return out;
}

IntervalConfig LittleIntervals::act(const InjectiveMap& u, const Element& x) const {
    require_arity(u.codomain(), x.arity(), "d1 lambda action");
    Element out;
    for (std::size_t j = 1; j <= u.domain(); ++j) out.intervals.push_back(x.intervals[u(j) - 1]);
    return out;
}

IntervalConfig LittleIntervals::reflect(const Element& x) const {
    Element out;
    for (const auto& iv : x.intervals) out.intervals.push_back({Rational(1) - iv.hi, Rational(1) - iv.lo});
    return out;
}

std::string LittleIntervals::to_string(const Element& x) const {
    std::string s = "[";
    for (std::size_t k = 0; k < x.intervals.size(); ++k) {
        if (k) s += ';';
        s += x.intervals[k].lo.str() + "," + x.intervals[k].hi.str();
    }
    return s + "]";
}

IntervalConfig LittleIntervals::parse(const std::string& text) const {
    const auto body = strip_brackets(text, '[', ']');
    Element out;
    for (const auto& part : split(body, ';')) {
        const auto ends = split(part, ',');
        if (ends.size() != 2) throw std::invalid_argument("interval '" + part + "' needs two endpoints");
        out.intervals.push_back({Rational::parse(ends[0]), Rational::parse(ends[1])});
    }
    out.validate();
    return out;
}

IntervalConfig LittleIntervals::sample(Rng& rng, std::size_t n) const {
    // Random partition of [0,1] into gap/interval/gap/.../interval/gap with small integer weights;
    // zero gaps make touching intervals.
    std::uniform_int_distribution<int> gap(0, 3), len(1, 4);
    std::vector<long> w;
    for (std::size_t k = 0; k < n; ++k) {
        w.push_back(gap(rng));
        w.push_back(len(rng));
    }
    w.push_back(gap(rng));
    const long total = std::accumulate(w.begin(), w.end(), 0L);
    std::vector<Interval> ivs;
    long acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
        acc += w[2 * k];
        const long lo = acc;
        acc += w[2 * k + 1];
        ivs.push_back({Rational(lo, total), Rational(acc, total)});
    }
    std::shuffle(ivs.begin(), ivs.end(), rng);
    return {std::move(ivs)};
}

}  // namespace opcalc
