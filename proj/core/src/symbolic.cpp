#include "opcalc/operads/symbolic.hpp"

#include "opcalc/text_util.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opcalc {

Atom Atom::act(const InjectiveMap& u) const {
    require_arity(u.codomain(), arity(), "atom lambda action");
    Atom out{name, base_arity, {}};
    for (std::size_t j = 1; j <= u.domain(); ++j) out.word.push_back(word[u(j) - 1]);
    return out;
}

std::string Atom::str() const {
    bool plain = word.size() == base_arity;
    for (std::size_t j = 0; plain && j < word.size(); ++j) plain = word[j] == j + 1;
    if (plain) return name;
    std::vector<std::string> w;
    for (auto l : word) w.push_back(std::to_string(l));
    return name + "|" + join(w, ",");
}

Term SymbolicOperad::canonical(Labeled<Atom> t) {
    return {canonical_sort(t, [](const Atom& a, const InjectiveMap& p) { return a.act(p); })};
}

Term SymbolicOperad::compose(const Element& x, std::size_t i, const Element& y) const {
    require_input(i, arity(x), "symbolic compose");
    return canonical(graft(x.tree, i, y.tree, [](Atom&) {}));
}

Term SymbolicOperad::act(const InjectiveMap& u, const Element& x) const {
    require_arity(u.codomain(), arity(x), "symbolic lambda action");
    return canonical(delete_leaves(x.tree, u, [](const Atom& a, const InjectiveMap& r) { return a.act(r); }));
}

Term SymbolicOperad::atom(const Atom& a) const {
    if (a.word.empty()) throw std::domain_error("atom of arity 0");
    Labeled<Atom> t;
    t.tree = Tree::corolla(a.arity());
    t.at = {a};
    return {std::move(t)};
}

Term SymbolicOperad::generator(const std::string& name, std::size_t arity) const {
    Atom a{name, arity, std::vector<std::size_t>(arity)};
    std::iota(a.word.begin(), a.word.end(), std::size_t{1});
    return atom(a);
}

std::string SymbolicOperad::to_string(const Element& x) const {
    const auto& t = x.tree;
    if (t.is_trivial()) return "id";
    auto rec = [&](auto&& self, VertexId v) -> std::string {
        std::string s = t.at[v].str();
        const auto& slots = t.tree.vertices[v].slots;
        const bool nested = std::any_of(slots.begin(), slots.end(), [](const Slot& sl) { return !sl.is_leaf(); });
        if (!nested) return s;
        std::vector<std::string> args;
        for (const auto& sl : slots) args.push_back(sl.is_leaf() ? "*" : self(self, static_cast<VertexId>(sl.value)));
        return s + "(" + join(args, ", ") + ")";
    };
    std::string out = rec(rec, *t.tree.root);
    const auto word = t.tree.leaf_word();
    if (!std::is_sorted(word.begin(), word.end())) {
        std::vector<std::string> w;
        for (auto l : word) w.push_back(std::to_string(l));
        out += " [" + join(w, " ") + "]";
    }
    return out;
}

Term SymbolicOperad::parse(const std::string& text) const {
    const auto s = trim(text);
    if (s == "id") return unit();
    if (auto it = signature_.find(s); it != signature_.end()) return generator(s, it->second);
    const auto slash = s.rfind('/');
    if (slash != std::string::npos && slash > 0) return generator(s.substr(0, slash), std::stoul(s.substr(slash + 1)));
    throw std::invalid_argument("unknown symbolic generator '" + s + "'");
}

Term SymbolicOperad::sample(Rng& rng, std::size_t n) const {
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), std::size_t{1});
    std::shuffle(w.begin(), w.end(), rng);
    std::uniform_int_distribution<int> pick(0, 2);
    const std::string names[] = {"p", "q", "r"};
    return atom(Atom{names[pick(rng)] + std::to_string(n), n, std::move(w)});
}

}  // namespace opcalc
