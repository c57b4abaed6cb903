#include <doctest.h>

#include <algorithm>

#include "strcyc/betti.hpp"
#include "strcyc/enumerate.hpp"
#include "strcyc/invariants.hpp"
#include "strcyc/radical_verify.hpp"
#include "strcyc/witness.hpp"

using namespace strcyc;

namespace {

std::vector<Hypergraph> smallFamily(int stringMax, int cycleMax) {
    std::vector<Hypergraph> out;
    for (int mu = 2; mu <= stringMax; ++mu) {
        for (const auto& p : stringPatterns(mu)) out.push_back(Hypergraph::stringFromPattern(p));
    }
    for (int mu = 3; mu <= cycleMax; ++mu) {
        for (const auto& p : cyclePatterns(mu)) out.push_back(Hypergraph::cycleFromPattern(p));
    }
    return out;
}

} // namespace

TEST_CASE("canonical ideal round trip is the identity on faces") {
    for (const Hypergraph& h : smallFamily(6, 5)) {
        MonomialIdeal ideal = canonicalIdeal(h);
        Hypergraph back = associatedHypergraph(ideal);
        CHECK(back.sameFaces(h));
        CHECK(back.shape() == h.shape());
        CHECK(validateSeparated(back));
    }
}

TEST_CASE("tail equals the hypergraph of the truncated ideal") {
    for (const Hypergraph& h : smallFamily(6, 6)) {
        MonomialIdeal ideal = canonicalIdeal(h);
        for (int k = 1; k <= h.mu() - 2; ++k) {
            CHECK(tail(h, k).sameFaces(associatedHypergraph(subIdeal(ideal, k))));
        }
    }
}

TEST_CASE("structural moves change the counts they claim to") {
    for (const Hypergraph& h : smallFamily(5, 6)) {
        for (int v = 1; v <= h.mu(); ++v) {
            if (h.open(v)) {
                Hypergraph closed = closeVertex(h, v);
                CHECK(closed.mu() == h.mu());
                CHECK(closed.closedCount() == h.closedCount() + 1);
            }
        }
        if (h.shape() == Shape::Cycle && h.mu() >= 6) {
            for (const OpenRun& r : openRuns(h)) {
                if (r.length == 2 && r.leftClosed != r.rightClosed) {
                    auto [merged, rec] = deleteRunAndMerge(h, r.start);
                    CHECK(merged.mu() == h.mu() - 3);
                    CHECK(rec.sources[0] != rec.sources[1]);
                }
            }
        }
    }
}

TEST_CASE("the height chain holds") {
    for (const Hypergraph& h : smallFamily(6, 6)) {
        MonomialIdeal ideal = canonicalIdeal(h);
        int pd = pdFormula(h);
        int size = static_cast<int>(witnessFor(h).size());
        CHECK(height(ideal) <= pd);
        CHECK(pd <= size);
        CHECK(size <= h.mu());
    }
}

TEST_CASE("pd of a subproblem via colon splits as expected") {
    // pd = max(pd(I_1), pd(J_1) + 1) whenever vertex 1 is closed, and
    // pd = pd(I_1) + 1 when every neighbor of vertex 1 is closed
    for (const Hypergraph& h : smallFamily(6, 5)) {
        if (h.open(1)) continue;
        MonomialIdeal ideal = canonicalIdeal(h);
        MonomialIdeal i1 = subIdeal(ideal, 1);
        MonomialIdeal j1 = colon(i1, ideal.gens[0]);
        int whole = pdOracle(ideal);
        CHECK(whole == std::max(pdOracle(i1), pdOracle(j1) + 1));
        bool neighborsClosed = h.closed(2) && (h.shape() == Shape::String || h.closed(h.mu()));
        if (neighborsClosed) CHECK(whole == pdOracle(i1) + 1);
    }
}

TEST_CASE("dropping two or three leading generators shifts pd as expected") {
    for (int mu = 3; mu <= 7; ++mu) {
        for (const auto& pat : stringPatterns(mu)) {
            Hypergraph h = Hypergraph::stringFromPattern(pat);
            MonomialIdeal ideal = canonicalIdeal(h);
            int pd = pdOracle(ideal);
            CHECK(pd <= pdOracle(subIdeal(ideal, 2)) + 2);
            if (mu >= 4 && h.open(2)) {
                CHECK(pd == pdOracle(subIdeal(ideal, 3)) + 2);
            }
        }
    }
}

TEST_CASE("passing the layered certificate implies passing the Groebner check") {
    for (const Hypergraph& h : smallFamily(5, 6)) {
        MonomialIdeal ideal = canonicalIdeal(h);
        Witness w = witnessFor(h);
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
        if (svCheck(levels, ideal.gens)) {
            CHECK(verifyPolynomials(ideal, expandWitness(w, ideal)).verdict ==
                  VerificationReport::Status::True);
        }
    }
}

TEST_CASE("necklace canonicalization is sound") {
    int canonical = 0;
    for (const auto& p : cyclePatterns(6)) {
        if (isCanonicalNecklace(p)) ++canonical;
    }
    CHECK(canonical == 13); // binary bracelets of length 6
    CHECK(isCanonicalNecklace("cocooo"));
    CHECK_FALSE(isCanonicalNecklace("ococoo"));
}
