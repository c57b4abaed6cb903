#include <doctest.h>

#include <functional>

#include "strcyc/hypergraph.hpp"
#include "strcyc/invariants.hpp"
#include "strcyc/monomial_ideal.hpp"

using namespace strcyc;

namespace {

Error::Code codeOf(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Error::Code::Internal;
}

} // namespace

TEST_CASE("parse accepts the pattern forms") {
    Hypergraph h = parseHypergraph("string:cc");
    CHECK(h.mu() == 2);
    CHECK(h.shape() == Shape::String);
    CHECK(h.closed(1));
    CHECK(h.closed(2));

    Hypergraph coc = parseHypergraph("string:coc");
    CHECK(coc.mu() == 3);
    CHECK(coc.open(2));
    CHECK(coc.encode() == "string:coc");

    Hypergraph cyc = parseHypergraph("cycle:ooo");
    CHECK(cyc.shape() == Shape::Cycle);
    CHECK(cyc.closedCount() == 0);
}

TEST_CASE("parse rejects bad input") {
    CHECK(codeOf([] { parseHypergraph("string:oc"); }) == Error::Code::NotSeparated);
    CHECK(codeOf([] { parseHypergraph("string:c"); }) == Error::Code::TooFewVertices);
    CHECK(codeOf([] { parseHypergraph("cycle:co"); }) == Error::Code::TooFewVertices);
    CHECK(codeOf([] { parseHypergraph("string:cxc"); }) == Error::Code::MalformedInput);
    CHECK(codeOf([] { parseHypergraph("blob:ccc"); }) == Error::Code::MalformedInput);
    CHECK(codeOf([] { parseHypergraph("faces:{1,2};{4}"); }) == Error::Code::MalformedInput);
    CHECK(codeOf([] { parseHypergraph("faces:{1,2};{1}"); }) == Error::Code::NotSeparated);
}

TEST_CASE("face lists classify structurally") {
    Hypergraph h = parseHypergraph("faces:{1,2};{2,3};{1};{3}");
    CHECK(h.shape() == Shape::String);
    CHECK(h.pattern() == "coc");

    // permuted triangle
    Hypergraph t = parseHypergraph("faces:{1,3};{3,2};{2,1}");
    CHECK(t.shape() == Shape::Cycle);
    CHECK(t.mu() == 3);

    Hypergraph g = parseHypergraph("faces:{1,2,3};{1};{2};{3}");
    CHECK(g.shape() == Shape::General);
}

TEST_CASE("separatedness predicate") {
    CHECK(validateSeparated(Hypergraph::cycleFromPattern("ooo")));
    CHECK(validateSeparated(Hypergraph::stringFromPattern("coc")));
    CHECK_FALSE(validateSeparated(Hypergraph::stringFromPattern("occ")));
    CHECK_FALSE(validateSeparated(Hypergraph::stringFromPattern("co")));
}

TEST_CASE("tail renumbers and closes the cut") {
    Hypergraph h = Hypergraph::stringFromPattern("cooc");
    CHECK(tail(h, 1).encode() == "string:coc");

    Hypergraph c = Hypergraph::cycleFromPattern("coccoc");
    CHECK(tail(c, 3).encode() == "string:coc");

    CHECK(codeOf([] { tail(Hypergraph::stringFromPattern("cc"), 1); }) == Error::Code::OutOfRange);
    CHECK(codeOf([] { tail(Hypergraph::stringFromPattern("cooc"), 3); }) ==
          Error::Code::OutOfRange);
}

TEST_CASE("tail agrees with the ideal route") {
    for (const char* enc : {"string:cooc", "string:cococ", "cycle:coccoc", "cycle:cooco"}) {
        Hypergraph h = parseHypergraph(enc);
        MonomialIdeal ideal = canonicalIdeal(h);
        for (int k = 1; k <= h.mu() - 2; ++k) {
            Hypergraph viaIdeal = associatedHypergraph(subIdeal(ideal, k));
            CHECK(tail(h, k).sameFaces(viaIdeal));
        }
    }
}

TEST_CASE("closeVertex flips exactly one status") {
    Hypergraph h = closeVertex(Hypergraph::stringFromPattern("coc"), 2);
    CHECK(h.encode() == "string:ccc");
    CHECK(codeOf([&] { closeVertex(h, 2); }) == Error::Code::AlreadyClosed);

    // splitting a run of 4 one vertex in from its left end leaves runs 1, 2
    Hypergraph long1 = closeVertex(Hypergraph::cycleFromPattern("cooooc"), 3);
    auto [s1, n1] = stringsOfOpens(long1);
    CHECK(s1 == 2);
    CHECK(n1 == std::vector<int>{1, 2});

    // splitting a run of 5 two vertices in leaves runs 2, 2
    Hypergraph long2 = closeVertex(Hypergraph::cycleFromPattern("coooooc"), 4);
    auto [s2, n2] = stringsOfOpens(long2);
    CHECK(s2 == 2);
    CHECK(n2 == std::vector<int>{2, 2});
}

TEST_CASE("deleteRunAndMerge contracts a c-o-o-c segment") {
    Hypergraph h = Hypergraph::cycleFromPattern("coocoo");
    auto [merged, rec] = deleteRunAndMerge(h, 2);
    CHECK(merged.encode() == "cycle:coo");
    CHECK(rec.mergedVertex == 1);
    CHECK(rec.sources == std::array<int, 2>{1, 4});
    CHECK(merged.mu() == h.mu() - 3);

    CHECK(codeOf([] { deleteRunAndMerge(Hypergraph::cycleFromPattern("oco"), 3); }) ==
          Error::Code::CoincidingEndpoints);
    CHECK(codeOf([] { deleteRunAndMerge(Hypergraph::cycleFromPattern("coocoo"), 1); }) ==
          Error::Code::InvalidRun);
    CHECK(codeOf([] { deleteRunAndMerge(Hypergraph::cycleFromPattern("cooco"), 2); }) ==
          Error::Code::InvalidRun);
}

TEST_CASE("open runs") {
    auto runs = openRuns(Hypergraph::stringFromPattern("cooccoc"));
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].start == 2);
    CHECK(runs[0].length == 2);
    CHECK(runs[0].leftClosed == 1);
    CHECK(runs[0].rightClosed == 4);
    CHECK(runs[1].start == 6);
    CHECK(runs[1].length == 1);

    auto wrap = openRuns(Hypergraph::cycleFromPattern("oocoo"));
    REQUIRE(wrap.size() == 1);
    CHECK(wrap[0].start == 4);
    CHECK(wrap[0].length == 4);
    CHECK(wrap[0].leftClosed == 3);
    CHECK(wrap[0].rightClosed == 3);

    auto none = openRuns(Hypergraph::cycleFromPattern("oooo"));
    REQUIRE(none.size() == 1);
    CHECK(none[0].length == 4);
    CHECK(none[0].leftClosed == 0);
}
