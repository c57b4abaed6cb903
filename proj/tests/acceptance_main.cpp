// Acceptance suite: exercises the full pipeline at the documented scales and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "strcyc/betti.hpp"
#include "strcyc/enumerate.hpp"
#include "strcyc/invariants.hpp"
#include "strcyc/radical_verify.hpp"
#include "strcyc/witness.hpp"

using namespace strcyc;

namespace {

constexpr long long kBudget = 1000000;

struct Instance {
    std::string encoded;
    Hypergraph h;
    int formulaPd;
    int witnessSize;
    Witness witness;
};

struct Suite {
    int failures = 0;
    std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

    void criterion(int number, bool ok, const std::string& detail) {
        auto now = std::chrono::steady_clock::now();
        long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - mark).count();
        mark = now;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << detail
                  << " (" << ms << " ms)\n";
        if (!ok) ++failures;
    }
};

std::vector<Instance> buildInstances(bool strings, int muMax) {
    std::vector<Instance> out;
    int muMin = strings ? 2 : 3;
    for (int mu = muMin; mu <= muMax; ++mu) {
        auto pats = strings ? stringPatterns(mu) : cyclePatterns(mu);
        for (const auto& p : pats) {
            Hypergraph h =
                strings ? Hypergraph::stringFromPattern(p) : Hypergraph::cycleFromPattern(p);
            Witness w = witnessFor(h);
            out.push_back(Instance{h.encode(), h, pdFormula(h), static_cast<int>(w.size()),
                                   std::move(w)});
        }
    }
    return out;
}

std::vector<std::string> sampledPatterns(const std::vector<std::string>& all, int count) {
    std::vector<std::string> out;
    int n = static_cast<int>(all.size());
    for (int i = 0; i < count; ++i) out.push_back(all[static_cast<size_t>(i) * n / count]);
    return out;
}

using IndexPolys = std::vector<std::vector<std::vector<int>>>;

IndexPolys canonShape(const Witness& w) {
    IndexPolys polys;
    for (const auto& p : w.polys) {
        std::vector<std::vector<int>> poly;
        for (const auto& t : p.terms) poly.push_back(t.gens);
        std::sort(poly.begin(), poly.end());
        polys.push_back(poly);
    }
    std::sort(polys.begin(), polys.end());
    return polys;
}

IndexPolys canonShape(IndexPolys polys) {
    for (auto& poly : polys) std::sort(poly.begin(), poly.end());
    std::sort(polys.begin(), polys.end());
    return polys;
}

std::vector<std::vector<Monomial>> witnessLevels(const Witness& w, const MonomialIdeal& ideal) {
    std::vector<std::vector<Monomial>> levels;
    for (const auto& p : w.polys) {
        std::vector<Monomial> level;
        for (const auto& t : p.terms) {
            uint32_t sup = 0;
            for (int g : t.gens) sup |= ideal.gens[g - 1].support;
            level.push_back(Monomial{sup});
        }
        levels.push_back(level);
    }
    return levels;
}

bool sameBetti(const BettiTable& a, const BettiTable& b) {
    if (a.entries.size() != b.entries.size() || a.pd != b.pd) return false;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].homologicalDegree != b.entries[i].homologicalDegree ||
            a.entries[i].sigma != b.entries[i].sigma || a.entries[i].rank != b.entries[i].rank)
            return false;
    }
    return true;
}

} // namespace

int main() {
    Suite suite;
    std::cout << "building instance families (strings mu<=9, cycles mu<=8)...\n";
    std::vector<Instance> strings = buildInstances(true, 9);
    std::vector<Instance> cycles = buildInstances(false, 8);
    std::cout << "  " << strings.size() << " strings, " << cycles.size() << " cycles\n";
    suite.mark = std::chrono::steady_clock::now();

    std::map<std::string, int> oraclePd;

    // 1: formula vs homology oracle on every string
    {
        int bad = 0;
        for (const Instance& inst : strings) {
            int pd = pdOracle(canonicalIdeal(inst.h));
            oraclePd[inst.encoded] = pd;
            if (pd != inst.formulaPd) ++bad;
        }
        std::ostringstream os;
        os << "formula equals oracle on all " << strings.size() << " strings with 2<=mu<=9 ("
           << bad << " mismatches)";
        suite.criterion(1, bad == 0 && strings.size() == 255, os.str());
    }

    // 2: formula vs homology oracle on every cycle
    {
        int bad = 0;
        for (const Instance& inst : cycles) {
            int pd = pdOracle(canonicalIdeal(inst.h));
            oraclePd[inst.encoded] = pd;
            if (pd != inst.formulaPd) ++bad;
        }
        std::ostringstream os;
        os << "formula equals oracle on all " << cycles.size() << " cycles with 3<=mu<=8 (" << bad
           << " mismatches)";
        suite.criterion(2, bad == 0 && cycles.size() == 504, os.str());
    }

    // 3: witness cardinality and term-count bounds
    {
        int bad = 0;
        for (const Instance& inst : strings) {
            if (inst.witnessSize != inst.formulaPd) ++bad;
            for (const auto& p : inst.witness.polys) {
                if (p.terms.size() > 2) ++bad;
            }
        }
        for (const Instance& inst : cycles) {
            if (inst.witnessSize != inst.formulaPd) ++bad;
            for (const auto& p : inst.witness.polys) {
                if (p.terms.size() > 3) ++bad;
            }
        }
        std::ostringstream os;
        os << "witness size equals pd everywhere; strings stay binomial, cycles trinomial (" << bad
           << " violations)";
        suite.criterion(3, bad == 0, os.str());
    }

    // 4: full radical verification, exhaustive to mu=6 plus documented samples
    {
        int bad = 0, runs = 0;
        auto verifyInstance = [&](const Hypergraph& h) {
            Witness w = witnessFor(h);
            VerificationReport rep = verifyWitness(h, w, kBudget);
            ++runs;
            if (rep.verdict != VerificationReport::Status::True) {
                ++bad;
                std::cout << "  verification not true: " << h.encode() << "\n";
            }
        };
        for (const Instance& inst : strings) {
            if (inst.h.mu() <= 6) verifyInstance(inst.h);
        }
        for (const Instance& inst : cycles) {
            if (inst.h.mu() <= 6) verifyInstance(inst.h);
        }
        std::cout << "  sampled instances at mu=7 and mu=8 (every floor(i*N/20)-th pattern):\n";
        for (int mu : {7, 8}) {
            for (bool isString : {true, false}) {
                auto pats = sampledPatterns(
                    isString ? stringPatterns(mu) : cyclePatterns(mu), 20);
                std::cout << "   " << (isString ? "string" : "cycle") << " mu=" << mu << ":";
                for (const auto& p : pats) std::cout << " " << p;
                std::cout << "\n";
                for (const auto& p : pats) {
                    verifyInstance(isString ? Hypergraph::stringFromPattern(p)
                                            : Hypergraph::cycleFromPattern(p));
                }
            }
        }
        std::ostringstream os;
        os << "radical verification true on " << runs << " instances (all mu<=6 plus 20 samples "
           << "per shape at mu=7,8), budget " << kBudget << " (" << bad << " failures)";
        suite.criterion(4, bad == 0, os.str());
    }

    // 5: spot values
    {
        bool ok = true;
        std::vector<std::string> problems;
        auto expectPd = [&](const std::string& enc, int want) {
            int got = pdFormula(parseHypergraph(enc));
            if (got != want) {
                ok = false;
                problems.push_back(enc + " pd " + std::to_string(got) + " != " +
                                   std::to_string(want));
            }
        };
        expectPd("string:coc", 2);
        for (int mu = 2; mu <= 9; ++mu) expectPd("string:" + std::string(mu, 'c'), mu);
        for (int mu = 3; mu <= 8; ++mu) expectPd("cycle:" + std::string(mu, 'c'), mu);
        for (int mu = 3; mu <= 9; ++mu)
            expectPd("cycle:" + std::string(mu, 'o'), mu - (1 + (mu - 2) / 3));
        expectPd("cycle:coco", 3);
        expectPd("cycle:cocococo", 6);

        Hypergraph alt6 = parseHypergraph("cycle:cococo");
        if (pdFormula(alt6) != 4) ok = false;
        IndexPolys expected6{{{2}}, {{4}}, {{6}}, {{1}, {3}, {5}}};
        if (canonShape(cycleWitness(alt6)) != canonShape(expected6)) {
            ok = false;
            problems.push_back("alternating 6-cycle witness differs");
        }

        Hypergraph c4 = parseHypergraph("cycle:cocc");
        if (pdFormula(c4) != 3) {
            ok = false;
            problems.push_back("4-cycle pd");
        }
        IndexPolys expected4{{{2}}, {{1}, {3}}, {{4}}};
        if (canonShape(cycleWitness(c4)) != canonShape(expected4)) {
            ok = false;
            problems.push_back("4-cycle witness differs");
        }
        for (const auto& p : problems) std::cout << "  spot value mismatch: " << p << "\n";
        suite.criterion(5, ok,
                        "spot values: three-vertex string, saturated pd, open cycles mu=3..9, "
                        "alternating cycles, displayed witnesses");
    }

    // 6: height <= pd <= witness size <= mu on every instance
    {
        int bad = 0;
        auto chain = [&](const Instance& inst) {
            int hgt = height(canonicalIdeal(inst.h));
            if (!(hgt <= inst.formulaPd && inst.formulaPd <= inst.witnessSize &&
                  inst.witnessSize <= inst.h.mu()))
                ++bad;
        };
        for (const Instance& inst : strings) chain(inst);
        for (const Instance& inst : cycles) chain(inst);
        std::ostringstream os;
        os << "height <= pd <= witness size <= mu on all " << strings.size() + cycles.size()
           << " instances (" << bad << " violations)";
        suite.criterion(6, bad == 0, os.str());
    }

    // 7: inductive pd identities through subideals and colons, oracle values
    {
        int bad = 0;
        for (const Instance& inst : strings) {
            MonomialIdeal ideal = canonicalIdeal(inst.h);
            int whole = oraclePd[inst.encoded];
            MonomialIdeal i1 = subIdeal(ideal, 1);
            MonomialIdeal j1 = colon(i1, ideal.gens[0]);
            if (whole != std::max(pdOracle(i1), pdOracle(j1) + 1)) ++bad;
            if (inst.h.closed(2) && whole != pdOracle(i1) + 1) ++bad;
            if (inst.h.mu() >= 3 && whole > pdOracle(subIdeal(ideal, 2)) + 2) ++bad;
            if (inst.h.mu() >= 4 && inst.h.open(2) &&
                whole != pdOracle(subIdeal(ideal, 3)) + 2)
                ++bad;
        }
        std::ostringstream os;
        os << "colon split, two-step bound and open-pair shift hold on all strings (" << bad
           << " violations)";
        suite.criterion(7, bad == 0, os.str());
    }

    // 8: layered certificates pass and imply the Groebner verdict
    {
        int bad = 0, checked = 0;
        auto certify = [&](const Hypergraph& h) {
            MonomialIdeal ideal = canonicalIdeal(h);
            Witness w = witnessFor(h);
            ++checked;
            if (!svCheck(witnessLevels(w, ideal), ideal.gens)) {
                ++bad;
                std::cout << "  certificate rejected: " << h.encode() << "\n";
                return;
            }
            if (verifyPolynomials(ideal, expandWitness(w, ideal), kBudget).verdict !=
                VerificationReport::Status::True) {
                ++bad;
                std::cout << "  certified set failed verification: " << h.encode() << "\n";
            }
        };
        certify(parseHypergraph("string:coc"));
        for (int mu : {3, 6, 9}) { // residue 0 construction
            certify(parseHypergraph("cycle:" + std::string(mu, 'o')));
            certify(parseHypergraph("cycle:c" + std::string(mu - 1, 'o')));
        }
        for (int mu : {4, 7}) { // residue 1 construction
            certify(parseHypergraph("cycle:" + std::string(mu, 'o')));
            certify(parseHypergraph("cycle:c" + std::string(mu - 1, 'o')));
        }
        std::ostringstream os;
        os << "layered certificates pass svCheck and Groebner verification on " << checked
           << " constructions (" << bad << " failures)";
        suite.criterion(8, bad == 0, os.str());
    }

    // 9: oracle self-checks
    {
        int bad = 0;
        for (const Instance& inst : strings) {
            if (inst.h.mu() > 4) continue;
            MonomialIdeal ideal = canonicalIdeal(inst.h);
            for (HomologyField f : {HomologyField::Rationals, HomologyField::GF2}) {
                if (!sameBetti(bettiTable(ideal, f, true), bettiTable(ideal, f, false))) ++bad;
            }
        }
        for (const Instance& inst : cycles) {
            if (inst.h.mu() > 4) continue;
            MonomialIdeal ideal = canonicalIdeal(inst.h);
            for (HomologyField f : {HomologyField::Rationals, HomologyField::GF2}) {
                if (!sameBetti(bettiTable(ideal, f, true), bettiTable(ideal, f, false))) ++bad;
            }
        }
        int fieldBad = 0;
        for (const Instance& inst : strings) {
            if (pdOracle(canonicalIdeal(inst.h), HomologyField::GF2) != oraclePd[inst.encoded])
                ++fieldBad;
        }
        for (const Instance& inst : cycles) {
            if (pdOracle(canonicalIdeal(inst.h), HomologyField::GF2) != oraclePd[inst.encoded])
                ++fieldBad;
        }
        std::ostringstream os;
        os << "pruned sweep equals the full sweep for mu<=4 (" << bad
           << " diffs); rational and GF(2) pd agree on every instance (" << fieldBad << " diffs)";
        suite.criterion(9, bad == 0 && fieldBad == 0, os.str());
    }

    std::cout << (suite.failures ? "ACCEPTANCE FAILURES: " : "acceptance clean: ")
              << suite.failures << " criterion failure(s)\n";
    return suite.failures;
}
