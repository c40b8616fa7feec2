#include "point_json.hpp"

#include "opcalc/axioms.hpp"
#include "opcalc/dot.hpp"
#include "opcalc/operads/associative.hpp"
#include "opcalc/operads/framed.hpp"
#include "opcalc/operads/little_discs.hpp"
#include "opcalc/operads/little_intervals.hpp"
#include "opcalc/operads/symbolic.hpp"
#include "opcalc/swiss_cheese.hpp"
#include "opcalc/text_util.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace opcalc;
using opcalc::cli::Json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::string operad = "d1";
    std::string kind = "w";
    std::size_t samples = 200;
    unsigned long long seed = 1;
    std::string format = "text";
    std::optional<std::size_t> truncate;
    std::vector<std::string> args;
    std::string suite;
    std::string loop = "*";
    std::string path = "*";
    std::string x = "*";
    std::string x_path;
    std::string t = "0";
    std::string config;
    std::string loops;
};

/// What a command prints: text for --format text, json for --format json; `failed` maps to exit 1.
struct Output {
    std::string text;
    Json json;
    bool failed = false;
};

// "-" reads stdin and "@file" reads a file; anything else is the point itself.
std::string read_argument(const std::string& s) {
    if (s == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    if (s.empty() || s.front() != '@') return s;
    std::ifstream in(s.substr(1));
    if (!in) throw UsageError("cannot read " + s.substr(1));
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Automorphisms of the base operad used as the non-base members of the family δ.
template <class P>
std::vector<std::pair<std::string, std::function<typename P::Element(const typename P::Element&)>>> automorphisms() {
    if constexpr (std::is_same_v<P, LittleIntervals>) {
        return {{"m", [](const IntervalConfig& c) { return mirror(c); }}};
    } else if constexpr (std::is_same_v<P, LittleDiscs>) {
        return {{"r1", [](const DiscConfig& c) { return rotate_quarter(c); }},
                {"r2", [](const DiscConfig& c) { return rotate_quarter(rotate_quarter(c)); }},
                {"r3", [](const DiscConfig& c) { return rotate_quarter(rotate_quarter(rotate_quarter(c))); }}};
    } else if constexpr (std::is_same_v<P, Associative>) {
        return {{"rev", [](const Ordering& o) { return Ordering{{o.word.rbegin(), o.word.rend()}}; }}};
    } else {
        return {};
    }
}

template <class P>
class Runner {
public:
    using E = typename P::Element;
    using B = BModule<P>;
    using WE = typename B::WElement;
    using BE = typename B::Element;
    using Map = OperadMap<WE, E>;
    using Family = PointedMapFamily<WE, E>;
    using Path = PathOfMaps<WE, E>;
    using Hofiber = HofiberPoint<WE, E>;

    explicit Runner(Options o) : o_(std::move(o)) {
        family_.maps.push_back(eta_mu(w(), [](const E& e) { return e; }, "*"));
        for (const auto& [name, f] : automorphisms<P>()) {
            family_.set.names.push_back(name);
            family_.maps.push_back(then(family_.maps.front(), f, name));
        }
    }

    Output run() {
        const auto& c = o_.command;
        if (c == "normalize") return normalize();
        if (c == "compose") return compose();
        if (c == "mu") return mu();
        if (c == "decompose") return decompose();
        if (c == "eval-xi") return eval_xi();
        if (c == "eval-psi") return eval_psi();
        if (c == "lift") return lift();
        if (c == "alpha") return alpha();
        if (c == "check") return check();
        if (c == "dot") return dot();
        throw UsageError("unknown command " + c);
    }

private:
    const P& base() const { return b_.base(); }
    const typename B::W& w() const { return b_.w(); }
    bool b_kind() const { return o_.kind == "b"; }

    const std::string& arg(std::size_t k) const {
        if (k >= o_.args.size()) throw UsageError(o_.command + ": missing argument " + std::to_string(k + 1));
        return o_.args[k];
    }
    std::string point_text(const std::string& s, bool b_point) const {
        const auto text = read_argument(s);
        if (cli::looks_like_json(text)) return cli::point_json_to_text(Json::parse(text), b_point);
        return text;
    }
    WE parse_w(const std::string& s) const { return w().parse(point_text(s, false)); }
    BE parse_b(const std::string& s) const { return b_.parse(point_text(s, true)); }

    Output w_out(const WE& x) const { return {w().to_string(x), cli::point_text_to_json(w().to_string(x), false)}; }
    Output b_out(const BE& x) const { return {b_.to_string(x), cli::point_text_to_json(b_.to_string(x), true)}; }

    std::size_t point_of_x(const std::string& name) const { return family_.set.index_of(name); }

    // "f" or "f|1/3|g|1/2|h": maps of the family with the breaks between them
    Path parse_path(const std::string& desc) const {
        const auto parts = split(desc, '|');
        if (parts.size() % 2 == 0) throw UsageError("path '" + desc + "': expected map|break|map|...");
        std::vector<Map> pieces;
        std::vector<Rational> breaks;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const auto part = trim(parts[k]);
            if (k % 2 == 0) pieces.push_back(family_(point_of_x(part)));
            else breaks.push_back(Rational::parse(part));
        }
        auto p = piecewise_path<WE, E>(std::move(pieces), std::move(breaks));
        p.name = desc;
        return p;
    }
    Hofiber hofiber() const { return {point_of_x(o_.x), parse_path(o_.path)}; }

    BimoduleMap<BE, E> xi_map(const Path& loop) const {
        return {"xi(" + loop.name + ")", [this, loop](const BE& y) { return xi_eval(base(), family_.base(), loop, y); }};
    }
    BimoduleMap<BE, Tagged<E>> psi_map(const Hofiber& h) const {
        return psi_double_prime<BE, E>(h.x, psi_prime(base(), family_, h), [this](const E& e) { return base().arity(e); });
    }

    Output value_out(const E& e) const { return {base().to_string(e), Json{{"value", base().to_string(e)}}}; }
    Output tagged_out(std::size_t x, const E& e) const {
        return {family_.set.names[x] + " " + base().to_string(e),
                Json{{"x", family_.set.names[x]}, {"value", base().to_string(e)}}};
    }
    Output tagged_out(const Tagged<E>& t) const {
        std::vector<std::string> tags;
        for (auto x : t.tags) tags.push_back(family_.set.names.at(x));
        return {base().to_string(t.value) + " ; " + join(tags, " "),
                Json{{"value", base().to_string(t.value)}, {"tags", tags}}};
    }

    Output normalize() const { return b_kind() ? b_out(parse_b(arg(0))) : w_out(parse_w(arg(0))); }

    Output compose() const {
        const auto i = static_cast<std::size_t>(std::stoul(arg(1)));
        if (b_kind()) return b_out(b_.right(parse_b(arg(0)), i, parse_w(arg(2))));
        return w_out(w().compose(parse_w(arg(0)), i, parse_w(arg(2))));
    }

    Output mu() const {
        if (b_kind()) {
            const auto x = parse_b(arg(0));
            if (!o_.truncate) return w_out(b_.mu_prime(x));
            const SelfBimodule<typename B::W> self(w());
            return w_out(eval_truncated_bimodule_map(b_, self, [this](const BE& c) { return b_.mu_prime(c); }, *o_.truncate, x));
        }
        const auto x = parse_w(arg(0));
        if (!o_.truncate) return value_out(w().mu(x));
        return value_out(eval_truncated_operad_map(w(), base(), [this](const WE& p) { return w().mu(p); }, *o_.truncate, x));
    }

    Output decompose() const {
        Output out;
        if (b_kind()) {
            const auto d = b_.decompose(parse_b(arg(0)));
            std::ostringstream os;
            out.json["bottom"] = d.bottom ? Json(w().to_string(*d.bottom)) : Json(nullptr);
            os << "bottom " << (d.bottom ? w().to_string(*d.bottom) : "-") << '\n';
            out.json["components"] = Json::array();
            for (std::size_t k = 0; k < d.components.size(); ++k) {
                os << "component " << k + 1 << ' ' << b_.to_string(d.components[k]) << '\n';
                out.json["components"].push_back(b_.to_string(d.components[k]));
            }
            out.json["tops"] = Json::array();
            for (const auto& t : d.tops) {
                os << "top on component " << t.component + 1 << " leaf " << t.slot << ' ' << w().to_string(t.label) << '\n';
                out.json["tops"].push_back({{"component", t.component + 1}, {"slot", t.slot}, {"label", w().to_string(t.label)}});
            }
            os << "level " << d.level() << " aux " << d.aux();
            out.json["level"] = d.level();
            out.json["aux"] = d.aux();
            out.text = os.str();
            return out;
        }
        const auto d = w().decompose(parse_w(arg(0)));
        std::ostringstream os;
        out.json["components"] = Json::array();
        for (std::size_t k = 0; k < d.components.size(); ++k) {
            os << "component " << k + 1 << ' ' << w().to_string(d.components[k]);
            Json c{{"point", w().to_string(d.components[k])}};
            if (d.attach[k]) {
                os << " on component " << d.attach[k]->parent + 1 << " leaf " << d.attach[k]->slot;
                c["parent"] = d.attach[k]->parent + 1;
                c["slot"] = d.attach[k]->slot;
            }
            os << '\n';
            out.json["components"].push_back(std::move(c));
        }
        os << "level " << d.level();
        out.json["level"] = d.level();
        out.text = os.str();
        return out;
    }

    Output eval_xi() const { return value_out(xi_eval(base(), family_.base(), parse_path(o_.loop), parse_b(arg(0)))); }

    Output eval_psi() const {
        const auto [x, value] = psi_prime_eval(base(), family_, hofiber(), parse_b(arg(0)));
        return tagged_out(x, value);
    }

    Output lift() const {
        const auto h = hofiber();
        // the path in X: "x" or "x|1/2|y"
        std::vector<std::size_t> points;
        std::vector<Rational> breaks;
        const auto parts = split(o_.x_path.empty() ? o_.x : o_.x_path, '|');
        if (parts.size() % 2 == 0) throw UsageError("x-path: expected x|break|y|...");
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k % 2 == 0) points.push_back(point_of_x(trim(parts[k])));
            else breaks.push_back(Rational::parse(trim(parts[k])));
        }
        if (points.front() != h.x) throw UsageError("x-path must start at --x");
        auto f0 = [this](const Hofiber& p, const BE& y) { return psi_prime_eval(base(), family_, p, y).second; };
        auto g = [&](const Hofiber&, const Rational& s) {
            std::size_t k = 0;
            while (k < breaks.size() && s >= breaks[k]) ++k;
            return points[k];
        };
        const auto [x, value] = lift_path(b_, base(), family_, f0, g, h, Rational::parse(o_.t), parse_b(arg(0)));
        return tagged_out(x, value);
    }

    Output alpha() const {
        const SC1Element c{Colour::Open, LittleIntervals{}.parse(o_.config)};
        std::vector<BimoduleMap<BE, E>> fs;
        if (!trim(o_.loops).empty())
            for (const auto& desc : split(o_.loops, ';')) fs.push_back(xi_map(parse_path(trim(desc))));
        return tagged_out(alpha_eval(b_, base(), family_.base(), c, fs, psi_map(hofiber()), parse_b(arg(0))));
    }

    template <class M>
    CheckReport confluence(const M& m, const std::string& what) const {
        CheckReport rep;
        rep.subject = "confluence: " + what;
        rep.samples = o_.samples;
        rep.seed = o_.seed;
        Rng rng(o_.seed);
        for (std::size_t k = 0; k < o_.samples; ++k) {
            const auto raw = m.sample_raw(rng, uniform(rng, 1, o_.truncate.value_or(5)));
            const auto canonical = m.normalize(raw);
            for (int order = 0; order < 10; ++order) {
                const auto other = m.normalize_with(raw, [&](std::size_t count) { return uniform(rng, 0, count - 1); });
                rep.record("orders", "every reduction order reaches the same normal form", other == canonical,
                           [&] { return m.to_string(canonical) + " vs " + m.to_string(other); });
            }
        }
        return rep;
    }

    CheckReport sc1_compatibility() const {
        CheckReport rep;
        rep.subject = "SC1 compatibility over " + base().name();
        rep.samples = o_.samples;
        rep.seed = o_.seed;
        Rng rng(o_.seed);
        using Closed = BimoduleMap<BE, E>;
        using Open = BimoduleMap<BE, Tagged<E>>;
        auto loop = [&] { return xi_map(random_hofiber_point(rng, family_, 2, std::size_t{0}).g); };
        for (std::size_t k = 0; k < o_.samples; ++k) {
            const auto n = uniform(rng, 0, 2);
            const auto c = random_sc1(rng, n, Colour::Open);
            const auto i = uniform(rng, 1, n + 1);
            std::vector<Closed> fs;
            for (std::size_t j = 0; j < n; ++j) fs.push_back(loop());
            const auto last = psi_map(random_hofiber_point(rng, family_));
            const auto y = b_.sample(rng, uniform(rng, 1, 4));
            std::vector<Closed> combined(fs.begin(), fs.begin() + static_cast<long>(i - 1));
            const auto inner = random_sc1(rng, uniform(rng, i <= n ? 1 : 0, 2), i <= n ? Colour::Closed : Colour::Open);
            std::vector<Closed> inner_fs;
            for (std::size_t j = 0; j < inner.closed_inputs(); ++j) inner_fs.push_back(loop());
            combined.insert(combined.end(), inner_fs.begin(), inner_fs.end());
            Tagged<E> nested;
            if (i <= n) {
                combined.insert(combined.end(), fs.begin() + static_cast<long>(i), fs.end());
                auto replaced = fs;
                replaced[i - 1] = Closed{"d1", [&, inner, inner_fs](const BE& z) {
                                             return d1_action_eval(b_, base(), family_.base(), inner, inner_fs, z);
                                         }};
                nested = alpha_eval(b_, base(), family_.base(), c, replaced, last, y);
            } else {
                const Open inner_alpha{"alpha", [&, inner, inner_fs](const BE& z) {
                                           return alpha_eval(b_, base(), family_.base(), inner, inner_fs, last, z);
                                       }};
                nested = alpha_eval(b_, base(), family_.base(), c, fs, inner_alpha, y);
            }
            const auto composed = alpha_eval(b_, base(), family_.base(), sc1_compose(c, i, inner), combined, last, y);
            rep.record("compose", "alpha(c o_i c'; f, f', g) = alpha(c; f with f_i replaced by the action of c')",
                       composed == nested, [&] { return b_.to_string(y); });
        }
        return rep;
    }

    Output check() const {
        const auto& s = o_.suite;
        const auto n = o_.samples;
        const auto seed = o_.seed;
        const auto max_arity = o_.truncate.value_or(3);
        CheckReport rep;
        if (s == "operad-axioms") rep = check_operad_axioms(base(), n, seed, max_arity);
        else if (s == "w-operad-axioms") rep = check_operad_axioms(w(), n, seed, max_arity);
        else if (s == "b-bimodule-axioms") rep = check_bimodule_axioms(w(), b_, n, seed, max_arity);
        else if (s == "w-confluence") rep = confluence(w(), "W" + base().name());
        else if (s == "b-confluence") rep = confluence(b_, "B" + base().name());
        else if (s == "mu") rep = check_operad_map(w(), base(), Map{"mu", [this](const WE& y) { return w().mu(y); }}, n, seed);
        else if (s == "mu-prime") {
            const SelfBimodule<typename B::W> self(w());
            rep = check_bimodule_map(b_, self, BimoduleMap<BE, WE>{"mu'", [this](const BE& y) { return b_.mu_prime(y); }}, n, seed);
        } else if (s == "family") {
            rep.subject = "operad maps of the family";
            rep.samples = n;
            rep.seed = seed;
            for (std::size_t x = 0; x < family_.maps.size(); ++x) rep.merge(check_operad_map(w(), base(), family_(x), n, seed + x));
        } else if (s == "xi") {
            rep = check_bimodule_map(b_, make_qx_bimodule(base(), family_, 0), xi_map(parse_path(o_.loop)), n, seed);
        } else if (s == "psi-prime") {
            const auto h = hofiber();
            rep = check_bimodule_map(b_, make_qx_bimodule(base(), family_, h.x), psi_prime(base(), family_, h), n, seed);
        } else if (s == "psi-double-prime") {
            const FiberBundleBimodule<P, WE> bundle(base(), family_);
            rep = check_bimodule_map(b_, bundle, psi_map(hofiber()), n, seed);
        } else if (s == "sc1") {
            rep = sc1_compatibility();
        } else {
            throw UsageError("unknown suite '" + s +
                             "' (operad-axioms, w-operad-axioms, b-bimodule-axioms, w-confluence, b-confluence, mu, "
                             "mu-prime, family, xi, psi-prime, psi-double-prime, sc1)");
        }
        Output out{rep.to_text(), Json::parse(rep.to_json())};
        out.failed = !rep.passed();
        return out;
    }

    Output dot() const {
        Output out;
        if (b_kind()) {
            const auto x = parse_b(arg(0));
            using V = BVertex<E>;
            out.text = to_dot<V>(
                x.t, [this](const V& v) { return w().to_string(v.label) + "\nh=" + v.height.str(); },
                [](const V&) { return std::string(); });
        } else {
            const auto x = parse_w(arg(0));
            using V = WVertex<E>;
            out.text = to_dot<V>(
                x.t, [this](const V& v) { return base().to_string(v.label); },
                [](const V& v) { return "t=" + v.length.str(); });
        }
        out.json = Json{{"dot", out.text}};
        return out;
    }

    Options o_;
    B b_;
    Family family_;
};

Output dispatch(const Options& o) {
    if (o.operad == "d1") return Runner<LittleIntervals>(o).run();
    if (o.operad == "d2") return Runner<LittleDiscs>(o).run();
    if (o.operad == "assoc") return Runner<Associative>(o).run();
    if (o.operad == "d1z2") return Runner<FramedIntervals>(o).run();
    if (o.operad == "sym") return Runner<SymbolicOperad>(o).run();
    throw UsageError("unknown operad '" + o.operad + "' (d1, d2, assoc, d1z2, sym)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with W and B constructions of operads"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--operad", o.operad, "d1, d2, assoc, d1z2 or sym")->capture_default_str();
    app.add_option("--samples", o.samples, "samples for check suites")->capture_default_str();
    app.add_option("--seed", o.seed, "random seed")->capture_default_str();
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--truncate", o.truncate, "work in the k-th filtration term");
    app.add_option("--kind", o.kind, "w or b points")->check(CLI::IsMember({"w", "b"}))->capture_default_str();

    auto point_cmd = [&](const char* name, const char* help, const char* args_help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("args", o.args, args_help)->required();
        return c;
    };
    point_cmd("normalize", "print the canonical form of a point", "POINT (text, JSON, @file, or - for stdin)");
    point_cmd("compose", "W composition x o_i y, or the right action for --kind b", "X I Y");
    point_cmd("mu", "mu of a W point, or mu' of a B point", "POINT");
    point_cmd("decompose", "prime components and filtration level", "POINT");
    point_cmd("dot", "Graphviz rendering", "POINT");
    auto* xi = point_cmd("eval-xi", "xi(g) at a B point", "POINT");
    xi->add_option("--loop", o.loop, "loop at the base map, e.g. '*|1/3|m|2/3|*'")->capture_default_str();
    auto* psi = point_cmd("eval-psi", "psi'(x, g) at a B point", "POINT");
    psi->add_option("--path", o.path, "path from the base map to delta_x")->capture_default_str();
    psi->add_option("--x", o.x, "point of X")->capture_default_str();
    auto* lift = point_cmd("lift", "the lifted homotopy at time t", "POINT");
    lift->add_option("--path", o.path, "path of the hofiber point")->capture_default_str();
    lift->add_option("--x", o.x, "point of X")->capture_default_str();
    lift->add_option("--x-path", o.x_path, "path in X starting at --x, e.g. '*|1/2|m'");
    lift->add_option("--t", o.t, "time in [0,1]")->capture_default_str();
    auto* alpha = point_cmd("alpha", "the SC1 action at a B point", "POINT");
    alpha->add_option("--config", o.config, "open-colour configuration, last interval ending at 1")->required();
    alpha->add_option("--loops", o.loops, "one loop per closed input, separated by ';'");
    alpha->add_option("--path", o.path, "path of the hofiber point on the open input")->capture_default_str();
    alpha->add_option("--x", o.x, "point of X")->capture_default_str();
    auto* check = app.add_subcommand("check", "run a property suite and report");
    check->add_option("suite", o.suite, "suite name")->required();
    check->add_option("--loop", o.loop, "loop for the xi suite")->capture_default_str();
    check->add_option("--path", o.path, "path for the psi suites")->capture_default_str();
    check->add_option("--x", o.x, "point of X for the psi suites")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        const auto out = dispatch(o);
        if (o.format == "json") std::cout << out.json.dump(2) << '\n';
        else std::cout << out.text << (out.text.empty() || out.text.back() == '\n' ? "" : "\n");
        return out.failed ? 1 : 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
    } catch (const Json::exception& e) {
        std::cerr << "JSON error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
    }
    return 2;
}
