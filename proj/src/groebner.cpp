#include "strcyc/groebner.hpp"

#include <algorithm>
#include <cassert>

namespace strcyc {

bool GroebnerBasis::containsUnit() const {
    for (const auto& g : gens) {
        if (g.isConstant()) return true;
    }
    return false;
}

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis,
                      const MonomialOrder& order, Budget& budget) {
    Polynomial rem;
    Polynomial work = f;
    while (!work.isZero()) {
        const Expo& lt = work.leadMono();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.isZero() && expoDivides(g.leadMono(), lt)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            // move the leading term into the remainder
            rem = rem.add(Polynomial::monomial(lt).mulScalar(work.leadCoeff()), order);
            work = work.sub(Polynomial::monomial(lt).mulScalar(work.leadCoeff()), order);
            continue;
        }
        budget.charge();
        // fraction-free elimination of the leading term
        BigInt a = work.leadCoeff();
        BigInt b = reducer->leadCoeff();
        BigInt d = BigInt::gcd(a, b);
        BigInt scale = b.divExact(d);
        if (scale.sign() < 0) scale = -scale, d = -d;
        work = work.mulScalar(scale)
                   .sub(reducer->mulTerm(a.divExact(d), expoQuot(lt, reducer->leadMono()), order),
                        order);
        rem = rem.mulScalar(scale);
    }
    rem.normalize();
    return rem;
}

namespace {

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    Expo lcm = expoLcm(f.leadMono(), g.leadMono());
    BigInt d = BigInt::gcd(f.leadCoeff(), g.leadCoeff());
    Polynomial left = f.mulTerm(g.leadCoeff().divExact(d), expoQuot(lcm, f.leadMono()), order);
    Polynomial right = g.mulTerm(f.leadCoeff().divExact(d), expoQuot(lcm, g.leadMono()), order);
    return left.sub(right, order);
}

struct PairKey {
    int deg;
    Expo lcm;
    size_t i, j;
};

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& input, const MonomialOrder& order,
                         Budget& budget) {
    std::vector<Polynomial> basis;
    for (const auto& f : input) {
        if (!f.isZero()) {
            Polynomial p = f;
            p.normalize();
            basis.push_back(std::move(p));
        }
    }

    auto pairLess = [&](const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return order.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<PairKey> pending;
    auto pushPair = [&](size_t i, size_t j) {
        Expo lcm = expoLcm(basis[i].leadMono(), basis[j].leadMono());
        pending.push_back(PairKey{expoDegree(lcm), std::move(lcm), i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) pushPair(i, j);
    }

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pairLess);
        PairKey key = *it;
        pending.erase(it);
        const Polynomial& f = basis[key.i];
        const Polynomial& g = basis[key.j];
        if (expoCoprime(f.leadMono(), g.leadMono())) continue;
        Polynomial h = normalForm(sPolynomial(f, g, order), basis, order, budget);
        if (h.isZero()) continue;
        basis.push_back(std::move(h));
        for (size_t i = 0; i + 1 < basis.size(); ++i) pushPair(i, basis.size() - 1);
    }

    // inter-reduce to the unique reduced basis (up to positive units)
    std::vector<bool> alive(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size() && alive[i]; ++j) {
            if (i == j || !alive[j]) continue;
            if (expoDivides(basis[j].leadMono(), basis[i].leadMono())) {
                if (basis[j].leadMono() != basis[i].leadMono() || j < i) alive[i] = false;
            }
        }
    }
    std::vector<Polynomial> survivors;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (alive[i]) survivors.push_back(basis[i]);
    }
    GroebnerBasis out;
    out.order = order;
    out.reduced = true;
    for (size_t i = 0; i < survivors.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < survivors.size(); ++j) {
            if (j != i) others.push_back(survivors[j]);
        }
        Polynomial r = normalForm(survivors[i], others, order, budget);
        if (!r.isZero()) out.gens.push_back(std::move(r));
    }
    std::sort(out.gens.begin(), out.gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leadMono(), b.leadMono());
    });
    return out;
}

bool radicalMembership(const Expo& monomial, const std::vector<Polynomial>& polys,
                       const MonomialOrder& order, Budget& budget) {
    size_t n = monomial.size();
    auto extend = [&](const Polynomial& p) {
        std::vector<PolyTerm> terms;
        for (const auto& t : p.terms()) {
            Expo e = t.mono;
            e.push_back(0);
            terms.push_back({std::move(e), t.coeff});
        }
        return Polynomial(std::move(terms), order);
    };
    std::vector<Polynomial> extended;
    extended.reserve(polys.size() + 1);
    for (const auto& p : polys) {
        if (!p.isZero()) extended.push_back(extend(p));
    }
    Expo tm = monomial;
    tm.push_back(1);
    std::vector<PolyTerm> rab;
    rab.push_back({std::move(tm), BigInt(1)});
    rab.push_back({Expo(n + 1, 0), BigInt(-1)});
    extended.push_back(Polynomial(std::move(rab), order));

    GroebnerBasis gb = buchberger(extended, order, budget);
    return gb.containsUnit();
}

} // namespace strcyc
