#pragma once

#include "opcalc/labeled_tree.hpp"
#include "opcalc/operad.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace opcalc {

/// A named generator seen through a Λ-action: input j of the atom is input word[j-1]
/// of the generator `name` of arity base_arity.
struct Atom {
    std::string name;
    std::size_t base_arity = 1;
    std::vector<std::size_t> word;

    std::size_t arity() const { return word.size(); }
    Atom act(const InjectiveMap& u) const;
    std::string str() const;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Element of the free reduced operad on named generators: a canonical tree of atoms.
struct Term {
    Labeled<Atom> tree;

    friend bool operator==(const Term& a, const Term& b) { return compare_compacted(a.tree, b.tree) == 0; }
    friend std::weak_ordering operator<=>(const Term& a, const Term& b) { return compare_compacted(a.tree, b.tree); }
};

/// Free reduced operad on symbols. Its elements print as nested applications
/// `f(g, h)`, the form symbolic composites are compared in.
class SymbolicOperad {
public:
    using Element = Term;

    std::string name() const { return "sym"; }
    std::size_t arity(const Element& x) const { return x.tree.arity(); }
    Element unit() const { return {}; }
    Element compose(const Element& x, std::size_t i, const Element& y) const;
    Element act(const InjectiveMap& u, const Element& x) const;

    /// Generator with the given name and arity (corolla, planar labelling).
    Element generator(const std::string& name, std::size_t arity) const;
    Element atom(const Atom& a) const;

    /// Declares a generator so that `parse(name)` knows its arity.
    void declare(const std::string& name, std::size_t arity) { signature_[name] = arity; }

    /// Unit prints as "id"; a vertex prints as `atom` or `atom(child, ...)` with leaves as "*";
    /// a non-planar leaf labelling is appended as " [l1 l2 ...]".
    std::string to_string(const Element& x) const;
    /// A declared generator name, "name/arity", or "id".
    Element parse(const std::string& text) const;
    Element sample(Rng& rng, std::size_t n) const;

private:
    static Element canonical(Labeled<Atom> t);
    std::map<std::string, std::size_t> signature_;
};

}  // namespace opcalc
