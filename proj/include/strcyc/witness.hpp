#pragma once

#include <string>
#include <vector>

#include "strcyc/hypergraph.hpp"
#include "strcyc/monomial_ideal.hpp"
#include "strcyc/poly.hpp"

namespace strcyc {

// One summand of a witness polynomial: the product of the generators with
// these (sorted, distinct) indices in the original hypergraph.
struct WitnessTerm {
    std::vector<int> gens;

    bool operator==(const WitnessTerm& o) const { return gens == o.gens; }
};

struct WitnessPoly {
    std::vector<WitnessTerm> terms;
};

// pd-many polynomials generating the canonical ideal up to radical, plus the
// reduction steps that produced them. String witnesses use at most two terms
// per polynomial, cycle witnesses at most three.
struct Witness {
    std::vector<WitnessPoly> polys;
    std::vector<std::string> trace;

    size_t size() const { return polys.size(); }
};

Witness stringWitness(const Hypergraph& h);
Witness cycleWitness(const Hypergraph& h);

// Dispatches on shape; General is rejected.
Witness witnessFor(const Hypergraph& h);

// Turns abstract terms into polynomials over the ideal's ambient ring,
// coefficient 1 on every term. Each product must be squarefree; overlap
// indicates a construction bug and raises NonSquarefreeProduct.
std::vector<Polynomial> expandWitness(const Witness& w, const MonomialIdeal& ideal);

} // namespace strcyc
