#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strcyc/hypergraph.hpp"

namespace strcyc {

// Squarefree monomial over a named ambient variable list: just its support.
struct Monomial {
    uint32_t support = 0;

    bool divides(const Monomial& o) const { return (support & ~o.support) == 0; }
    bool coprime(const Monomial& o) const { return (support & o.support) == 0; }
    int degree() const { return __builtin_popcount(support); }
    bool operator==(const Monomial& o) const { return support == o.support; }
};

// Squarefree monomial ideal with an ordered ambient variable list.
struct MonomialIdeal {
    std::vector<std::string> vars;
    std::vector<Monomial> gens;

    int varIndex(const std::string& name) const;
    std::string monomialText(const Monomial& m) const;
    std::string generatorsText() const;
};

// The canonical ideal of a separated hypergraph: one variable per face,
// generator j = product of the variables of all faces containing j.
// Face naming: {j} -> v<j>; structurally consecutive pairs -> e<j><j+1>
// (an underscore separates multi-digit endpoints); anything else ->
// f<v1>_<v2>_... Ambient order: edge faces along the structure, then
// singletons ascending, then remaining faces in vertex-list order.
MonomialIdeal canonicalIdeal(const Hypergraph& h);

// The hypergraph on generator indices whose faces are the distinct
// variable-support sets.
Hypergraph associatedHypergraph(const MonomialIdeal& ideal);

// Removes every monomial that is divisible by another one; order preserved.
std::vector<Monomial> minimalGenerators(const std::vector<Monomial>& gens);

// (I : m), computed by the monomial colon rule and minimalized.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

// Minimum number of variables meeting the support of every generator,
// by exhaustive branch and bound.
int height(const MonomialIdeal& ideal);

// The ideal generated by gens[from..end) in the same ambient ring,
// 0-based from.
MonomialIdeal subIdeal(const MonomialIdeal& ideal, int from);

// Parses "v1*e12, e12*e23" against an ordered ambient list. Rejects
// repeated variables and explicit powers above 1 as NotSquarefree.
MonomialIdeal parseIdealText(const std::string& text, const std::vector<std::string>& ring);

} // namespace strcyc
