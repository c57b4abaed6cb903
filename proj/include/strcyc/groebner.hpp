#pragma once

#include <vector>

#include "strcyc/poly.hpp"

namespace strcyc {

// Shared reduction-step budget for one verification run. Every top-reduction
// performed by normalForm costs one step; exhausting the budget raises
// BudgetExceeded so callers can report an inconclusive verdict instead of a
// wrong one.
struct Budget {
    long long limit = 1000000;
    long long used = 0;

    void charge() {
        if (++used > limit) throw BudgetExceeded(used);
    }
};

struct GroebnerBasis {
    std::vector<Polynomial> gens;
    MonomialOrder order;
    bool reduced = false;

    bool containsUnit() const;
};

// Remainder of multivariate division of f by G: no term of the result is
// divisible by any leading term of G.
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis,
                      const MonomialOrder& order, Budget& budget);

// Buchberger with the normal pair selection strategy and the coprimality and
// chain criteria; output is the reduced basis (primitive integer scaling,
// positive leading coefficients), deterministic for a fixed order.
GroebnerBasis buchberger(const std::vector<Polynomial>& input, const MonomialOrder& order,
                         Budget& budget);

// Rabinowitsch test: m lies in the radical of (polys) iff 1 lies in
// (polys) + (t*m - 1) over the ring extended by one trailing variable.
bool radicalMembership(const Expo& monomial, const std::vector<Polynomial>& polys,
                       const MonomialOrder& order, Budget& budget);

} // namespace strcyc
