#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "strcyc/errors.hpp"

namespace strcyc {

enum class Shape { String, Cycle, General };

// A face is a vertex subset, encoded as a bitmask (bit v-1 <=> vertex v).
using Face = uint32_t;

// Maximal run of consecutive open vertices, bounded by closed vertices
// (cyclically for cycle hypergraphs). left/right are the bounding closed
// vertex indices; they coincide only in cycles with a single closed vertex.
struct OpenRun {
    int start = 0;
    int length = 0;
    int leftClosed = 0;
    int rightClosed = 0;
};

// Produced by deleteRunAndMerge: the merged vertex of the result hypergraph
// carries the product of the two source generators.
struct MergeRecord {
    int mergedVertex = 1;
    std::array<int, 2> sources{0, 0};
};

// Separated hypergraph on [mu]. For String/Cycle shapes the face list is
// derived from the open/closed pattern along a structural vertex order
// (identity for pattern-built hypergraphs; a permutation when the shape was
// recognized from an explicit face list up to relabeling). General shapes
// carry their explicit face set. Values are immutable after construction.
class Hypergraph {
public:
    static Hypergraph stringFromPattern(const std::string& pattern);
    static Hypergraph cycleFromPattern(const std::string& pattern);
    // Explicit 1-based faces; classifies the shape structurally.
    static Hypergraph fromFaces(int mu, std::vector<Face> faces);

    int mu() const { return mu_; }
    Shape shape() const { return shape_; }
    bool closed(int v) const { return closed_[v - 1]; }
    bool open(int v) const { return !closed_[v - 1]; }
    int closedCount() const;
    bool saturated() const { return closedCount() == mu_; }

    const std::vector<Face>& faces() const { return faces_; }

    // Structural order: order()[p] is the vertex id at position p along the
    // path/cycle. Identity unless the shape was detected from permuted faces.
    const std::vector<int>& order() const { return order_; }
    bool orderIsIdentity() const;

    // Open/closed pattern along the structural order, e.g. "coc".
    std::string pattern() const;
    // Round-trippable text form: "string:coc", "cycle:cooc", or "faces:...".
    std::string encode() const;

    // Same vertex set and same face set (vertex ids compared literally).
    bool sameFaces(const Hypergraph& other) const;

    // Position (1-based) of vertex v along the structural order.
    int positionOf(int v) const;

private:
    Hypergraph() = default;
    void deriveFacesFromPattern();
    void deriveStatusFromFaces();
    void classifyShape();

    int mu_ = 0;
    Shape shape_ = Shape::General;
    std::vector<bool> closed_;
    std::vector<Face> faces_;
    std::vector<int> order_;
};

// Accepts "string:<c|o>+", "cycle:<c|o>+" and "faces:{1,2};{2,3};{1}".
// Validates vertex coverage, size bounds and separatedness.
Hypergraph parseHypergraph(const std::string& text);

// Pure predicate: every pair of vertices is distinguished by faces in both
// directions.
bool validateSeparated(const Hypergraph& h);

// The string hypergraph induced by generators k+1..mu, renumbered 1..mu-k.
// The new first vertex becomes closed; for cycles the last vertex does too.
Hypergraph tail(const Hypergraph& h, int k);

// Identical hypergraph with the singleton face {v} added.
Hypergraph closeVertex(const Hypergraph& h, int v);

// Removes the two adjacent open vertices runStart, runStart+1 from a cycle
// and identifies their (distinct) closed neighbors. The result is the cycle
// on mu-3 vertices whose vertex 1 is the merged closed vertex, followed by
// the surviving vertices in cyclic order starting after the removed run.
std::pair<Hypergraph, MergeRecord> deleteRunAndMerge(const Hypergraph& h, int runStart);

// Maximal runs of consecutive open vertices in structural position space
// (wrapping for cycles). A fully open cycle yields one run of length mu with
// sentinel bounds 0. Positions, not vertex ids: callers on permuted-order
// hypergraphs must translate through order().
std::vector<OpenRun> openRuns(const Hypergraph& h);

} // namespace strcyc
