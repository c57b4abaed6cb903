#pragma once

#include <vector>

#include "strcyc/groebner.hpp"
#include "strcyc/monomial_ideal.hpp"
#include "strcyc/witness.hpp"

namespace strcyc {

// Outcome of verifying that a witness generates the canonical ideal up to
// radical: containment of every witness polynomial in the ideal, and radical
// membership of every generator in the witness ideal. Budget exhaustion
// yields Inconclusive with the finished memberships kept.
struct VerificationReport {
    enum class Status { True, False, Inconclusive };

    Status verdict = Status::Inconclusive;
    bool containment = false;
    // one entry per generator: 1 member, 0 not member, -1 not decided
    std::vector<int> memberships;
    long long stepsUsed = 0;
    long long budgetLimit = 0;

    bool allDecided() const;
};

VerificationReport verifyWitness(const Hypergraph& h, const Witness& w,
                                 long long budgetLimit = 1000000);

// Same check against an explicit polynomial set over the ideal's ring.
VerificationReport verifyPolynomials(const MonomialIdeal& ideal,
                                     const std::vector<Polynomial>& polys,
                                     long long budgetLimit = 1000000);

// Layered-partition certificate: the levels cover the declared generator
// set, the first level is a single monomial, and any two distinct monomials
// of a level have a product divisible by some monomial of an earlier level.
bool svCheck(const std::vector<std::vector<Monomial>>& levels,
             const std::vector<Monomial>& generators);

} // namespace strcyc
