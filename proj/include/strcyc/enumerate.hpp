#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "strcyc/hypergraph.hpp"

namespace strcyc {

// All separated string patterns of size mu, endpoints closed, in
// lexicographic order of the interior bits (c before o).
inline std::vector<std::string> stringPatterns(int mu) {
    std::vector<std::string> out;
    int interior = mu - 2;
    for (int bits = 0; bits < (1 << interior); ++bits) {
        std::string pat(mu, 'c');
        for (int i = 0; i < interior; ++i) {
            if ((bits >> i) & 1) pat[i + 1] = 'o';
        }
        out.push_back(pat);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All cycle patterns of size mu in lexicographic order.
inline std::vector<std::string> cyclePatterns(int mu) {
    std::vector<std::string> out;
    for (int bits = 0; bits < (1 << mu); ++bits) {
        std::string pat(mu, 'c');
        for (int i = 0; i < mu; ++i) {
            if ((bits >> i) & 1) pat[i] = 'o';
        }
        out.push_back(pat);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// True when the pattern is the lexicographically smallest among all its
// rotations and reflections; used for optional necklace deduplication.
inline bool isCanonicalNecklace(const std::string& pat) {
    int n = static_cast<int>(pat.size());
    std::string rev(pat.rbegin(), pat.rend());
    for (int r = 0; r < n; ++r) {
        std::string rot = pat.substr(r) + pat.substr(0, r);
        if (rot < pat) return false;
        std::string rrot = rev.substr(r) + rev.substr(0, r);
        if (rrot < pat) return false;
    }
    return true;
}

} // namespace strcyc
