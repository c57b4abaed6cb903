#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strcyc/monomial_ideal.hpp"

namespace strcyc {

enum class HomologyField { Rationals, GF2 };

// Explicit simplicial complex over a named ground set, faces as bitmasks.
// The face list is downward closed and contains the empty face whenever the
// complex is nonvoid.
struct SimplicialComplex {
    std::vector<std::string> ground;
    std::vector<uint32_t> faces;

    bool contains(uint32_t f) const;
};

// The complex whose faces are exactly the squarefree monomials not in the
// ideal.
SimplicialComplex stanleyReisner(const MonomialIdeal& ideal);

// Reduced homology ranks; index d+1 of the result holds the rank in
// dimension d, starting at d = -1. Exact over the chosen field; the chain
// complex is shrunk by elementary collapses first unless collapse is false.
std::vector<int> reducedHomologyRanks(const SimplicialComplex& complex, HomologyField field,
                                      bool collapse = true);

// Faces of the restriction to sigma of the complex of all subsets avoiding
// the given supports (the sigma-induced Stanley-Reisner subcomplex),
// enumerated directly from the minimal nonfaces.
std::vector<uint32_t> restrictedFaces(uint32_t sigma, const std::vector<uint32_t>& supports);

// Reduced homology ranks of an explicit face list (same convention).
std::vector<int> homologyOfFaces(std::vector<uint32_t> faces, HomologyField field,
                                 bool collapse = true);

} // namespace strcyc
