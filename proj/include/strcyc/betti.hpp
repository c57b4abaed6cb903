#pragma once

#include <cstdint>
#include <vector>

#include "strcyc/monomial_ideal.hpp"
#include "strcyc/simplicial.hpp"

namespace strcyc {

struct BettiEntry {
    int homologicalDegree = 0; // i
    uint32_t sigma = 0;        // variable subset as a bitmask
    int rank = 0;
};

struct BettiTable {
    std::vector<BettiEntry> entries; // nonzero entries only, sorted
    int pd = 0;                      // max i with a nonzero entry
};

// Multigraded Betti numbers of R/I: beta_{i,sigma} is the rank of reduced
// homology in dimension |sigma| - i - 1 of the Stanley-Reisner complex
// restricted to sigma. With prune=true the sigma sweep visits only unions of
// generator supports; the unpruned sweep visits every variable subset.
BettiTable bettiTable(const MonomialIdeal& ideal, HomologyField field = HomologyField::Rationals,
                      bool prune = true, bool collapse = true);

// Projective dimension of R/I via the Betti table.
int pdOracle(const MonomialIdeal& ideal, HomologyField field = HomologyField::Rationals);

} // namespace strcyc
