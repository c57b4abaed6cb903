#include "strcyc/radical_verify.hpp"

#include <algorithm>
#include <set>

namespace strcyc {

bool VerificationReport::allDecided() const {
    return std::all_of(memberships.begin(), memberships.end(), [](int m) { return m >= 0; });
}

namespace {

Expo supportExpo(uint32_t support, int nvars) {
    Expo e(nvars, 0);
    for (int i = 0; i < nvars; ++i) {
        if (support & (uint32_t(1) << i)) e[i] = 1;
    }
    return e;
}

} // namespace

VerificationReport verifyPolynomials(const MonomialIdeal& ideal,
                                     const std::vector<Polynomial>& polys,
                                     long long budgetLimit) {
    VerificationReport report;
    report.budgetLimit = budgetLimit;
    report.memberships.assign(ideal.gens.size(), -1);
    MonomialOrder order;
    int nvars = static_cast<int>(ideal.vars.size());

    // containment: every term of every polynomial must be divisible by some
    // generator, so each polynomial lies in the (monomial) ideal itself
    report.containment = true;
    for (const auto& p : polys) {
        for (const auto& t : p.terms()) {
            bool divisible = false;
            for (const auto& g : ideal.gens) {
                if (expoDivides(supportExpo(g.support, nvars), t.mono)) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) report.containment = false;
        }
    }

    bool exhausted = false;
    for (size_t j = 0; j < ideal.gens.size(); ++j) {
        Budget budget{budgetLimit, 0};
        try {
            bool in = radicalMembership(supportExpo(ideal.gens[j].support, nvars), polys, order,
                                        budget);
            report.memberships[j] = in ? 1 : 0;
        } catch (const BudgetExceeded&) {
            exhausted = true;
        }
        report.stepsUsed += budget.used;
    }

    if (!report.containment ||
        std::any_of(report.memberships.begin(), report.memberships.end(),
                    [](int m) { return m == 0; })) {
        report.verdict = VerificationReport::Status::False;
    } else if (exhausted) {
        report.verdict = VerificationReport::Status::Inconclusive;
    } else {
        report.verdict = VerificationReport::Status::True;
    }
    return report;
}

VerificationReport verifyWitness(const Hypergraph& h, const Witness& w, long long budgetLimit) {
    MonomialIdeal ideal = canonicalIdeal(h);
    return verifyPolynomials(ideal, expandWitness(w, ideal), budgetLimit);
}

bool svCheck(const std::vector<std::vector<Monomial>>& levels,
             const std::vector<Monomial>& generators) {
    if (levels.empty() || levels.front().size() != 1) return false;

    std::set<uint32_t> covered;
    for (const auto& level : levels) {
        for (const Monomial& m : level) covered.insert(m.support);
    }
    for (const Monomial& g : generators) {
        if (!covered.count(g.support)) return false;
    }
    // and nothing outside the declared set
    std::set<uint32_t> declared;
    for (const Monomial& g : generators) declared.insert(g.support);
    if (covered != declared) return false;

    for (size_t l = 1; l < levels.size(); ++l) {
        const auto& level = levels[l];
        for (size_t a = 0; a < level.size(); ++a) {
            for (size_t c = 0; c < level.size(); ++c) {
                if (a == c) continue;
                uint32_t product = level[a].support | level[c].support;
                bool witnessed = false;
                for (size_t lp = 0; lp < l && !witnessed; ++lp) {
                    for (const Monomial& p : levels[lp]) {
                        if ((p.support & ~product) == 0) {
                            witnessed = true;
                            break;
                        }
                    }
                }
                if (!witnessed) return false;
            }
        }
    }
    return true;
}

} // namespace strcyc
