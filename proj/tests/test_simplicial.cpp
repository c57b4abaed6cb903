#include <doctest.h>

#include <algorithm>
#include <array>

#include "strcyc/betti.hpp"
#include "strcyc/invariants.hpp"
#include "strcyc/simplicial.hpp"

using namespace strcyc;

TEST_CASE("Stanley-Reisner complexes") {
    MonomialIdeal tri = parseIdealText("x*y, y*z, x*z", {"x", "y", "z"});
    SimplicialComplex c = stanleyReisner(tri);
    CHECK(c.faces == std::vector<uint32_t>{0, 1, 2, 4}); // empty face and 3 vertices

    MonomialIdeal principal = parseIdealText("x", {"x", "y", "z"});
    SimplicialComplex cp = stanleyReisner(principal);
    CHECK(cp.faces.size() == 4); // all subsets of {y, z}
    for (uint32_t f : cp.faces) CHECK((f & 1u) == 0);

    // faces are exactly the supports avoiding every generator
    MonomialIdeal coc = canonicalIdeal(parseHypergraph("string:coc"));
    SimplicialComplex cc = stanleyReisner(coc);
    for (uint32_t sub = 0; sub < 16; ++sub) {
        bool avoidsAll = true;
        for (const Monomial& g : coc.gens) {
            if ((g.support & ~sub) == 0) avoidsAll = false;
        }
        CHECK(cc.contains(sub) == avoidsAll);
    }
}

TEST_CASE("reduced homology ranks") {
    // three isolated points
    std::vector<int> pts = homologyOfFaces({0u, 1u, 2u, 4u}, HomologyField::Rationals);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == 0);
    CHECK(pts[1] == 2);

    // hollow triangle
    std::vector<int> tri =
        homologyOfFaces({0u, 1u, 2u, 4u, 3u, 5u, 6u}, HomologyField::Rationals);
    REQUIRE(tri.size() == 3);
    CHECK(tri[1] == 0);
    CHECK(tri[2] == 1);

    // the empty complex {∅}
    std::vector<int> empt = homologyOfFaces({0u}, HomologyField::Rationals);
    REQUIRE(empt.size() == 1);
    CHECK(empt[0] == 1);

    // a cone collapses away entirely
    std::vector<int> cone = homologyOfFaces({0u, 1u, 2u, 3u}, HomologyField::Rationals);
    CHECK(cone.empty());
}

TEST_CASE("torsion distinguishes the fields") {
    // six-vertex projective plane: 10 facets, Euler characteristic 1
    std::vector<std::array<int, 3>> facets = {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6},
                                              {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 6},
                                              {3, 5, 6}, {4, 5, 6}};
    std::vector<uint32_t> faces{0u};
    for (const auto& f : facets) {
        uint32_t m = (1u << (f[0] - 1)) | (1u << (f[1] - 1)) | (1u << (f[2] - 1));
        for (uint32_t sub = m;; sub = (sub - 1) & m) {
            if (sub) faces.push_back(sub);
            if (sub == 0) break;
        }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    REQUIRE(faces.size() == 1 + 6 + 15 + 10);

    std::vector<int> qq = homologyOfFaces(faces, HomologyField::Rationals);
    for (int r : qq) CHECK(r == 0);

    std::vector<int> f2 = homologyOfFaces(faces, HomologyField::GF2);
    REQUIRE(f2.size() == 4);
    CHECK(f2[2] == 1);
    CHECK(f2[3] == 1);
}

TEST_CASE("collapse preprocessing does not change ranks") {
    for (const char* enc : {"string:coc", "string:cooc", "cycle:coco", "cycle:oooo"}) {
        MonomialIdeal ideal = canonicalIdeal(parseHypergraph(enc));
        std::vector<uint32_t> supports;
        for (const Monomial& g : ideal.gens) supports.push_back(g.support);
        uint32_t full = (uint32_t(1) << ideal.vars.size()) - 1;
        for (uint32_t sigma = 1; sigma <= full; ++sigma) {
            if ((sigma & full) != sigma) continue;
            auto faces = restrictedFaces(sigma, supports);
            for (HomologyField f : {HomologyField::Rationals, HomologyField::GF2}) {
                CHECK(homologyOfFaces(faces, f, true) == homologyOfFaces(faces, f, false));
            }
        }
    }
}

TEST_CASE("betti oracle") {
    CHECK(pdOracle(canonicalIdeal(parseHypergraph("string:coc"))) == 2);
    CHECK(pdOracle(canonicalIdeal(parseHypergraph("cycle:cococo"))) == 4);

    MonomialIdeal tri = parseIdealText("x*y, y*z, x*z", {"x", "y", "z"});
    BettiTable table = bettiTable(tri);
    CHECK(table.pd == 2);
    // the top Betti number sits in the full degree with rank 2
    bool found = false;
    for (const auto& e : table.entries) {
        if (e.homologicalDegree == 2 && e.sigma == 7u) {
            found = true;
            CHECK(e.rank == 2);
        }
    }
    CHECK(found);

    std::vector<std::string> manyVars;
    for (int i = 0; i < 25; ++i) manyVars.push_back("x" + std::to_string(i));
    MonomialIdeal wide = parseIdealText("x0", manyVars);
    CHECK_THROWS_AS((void)bettiTable(wide), Error);
}

TEST_CASE("pruned sweep equals the full sweep on small instances") {
    for (const char* enc : {"string:coc", "string:cc", "cycle:coco", "cycle:ooo"}) {
        MonomialIdeal ideal = canonicalIdeal(parseHypergraph(enc));
        for (HomologyField f : {HomologyField::Rationals, HomologyField::GF2}) {
            BettiTable pruned = bettiTable(ideal, f, true);
            BettiTable full = bettiTable(ideal, f, false);
            REQUIRE(pruned.entries.size() == full.entries.size());
            for (size_t i = 0; i < pruned.entries.size(); ++i) {
                CHECK(pruned.entries[i].homologicalDegree == full.entries[i].homologicalDegree);
                CHECK(pruned.entries[i].sigma == full.entries[i].sigma);
                CHECK(pruned.entries[i].rank == full.entries[i].rank);
            }
        }
    }
}
