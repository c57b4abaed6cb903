#pragma once

#include <vector>

#include "strcyc/hypergraph.hpp"

namespace strcyc {

// A 2-special configuration: a block of consecutive whole open runs
// (cyclically consecutive for cycles) whose separating closed vertices are
// single, with end run lengths = 1 mod 3 and interior run lengths = 2 mod 3.
// Run indices refer to the run list returned by stringsOfOpens.
struct TwoSpecialConfig {
    int firstRun = 0;             // 0-based index into the run list
    int runCount = 0;             // >= 2
    bool wrapsWhole = false;      // covers every run with coinciding bounds
    std::vector<int> openVertices;    // structural positions covered
    std::vector<int> closedVertices;  // bounding + separating positions
};

struct InvariantReport {
    int s = 0;
    std::vector<int> nList;
    int b = 0;
    int modularity = 0;
    int pd = 0;
};

// Number of strings of opens and their lengths. Strings: runs numbered from
// endpoint 1. Cycles with at least two closed vertices: numbered from the
// lowest-position closed vertex onward. Cycles with at most one closed
// vertex: s = 1 and n1 = mu - 1 by convention.
std::pair<int, std::vector<int>> stringsOfOpens(const Hypergraph& h);

// s + sum floor((n_i - 1) / 3).
int bValue(const Hypergraph& h);

std::vector<TwoSpecialConfig> twoSpecialConfigs(const Hypergraph& h);

// Maximum number of configurations sharing no open vertex.
int modularity(const Hypergraph& h);

// mu - b + M.
int pdFormula(const Hypergraph& h);

InvariantReport invariantReport(const Hypergraph& h);

} // namespace strcyc
