#include "strcyc/invariants.hpp"

#include <algorithm>
#include <cassert>

namespace strcyc {

namespace {

void requireStringOrCycle(const Hypergraph& h) {
    if (h.shape() == Shape::General)
        fail(Error::Code::UnsupportedShape, "invariant requires a string or cycle hypergraph");
}

// Runs in structural position space, ordered as the report orders them.
std::vector<OpenRun> orderedRuns(const Hypergraph& h) {
    std::vector<OpenRun> runs = openRuns(h);
    // openRuns already starts cycles at the first closed position; strings
    // come out left to right. Nothing to reorder.
    return runs;
}

int wrapPos(int x, int mu) { return (x - 1 + mu) % mu + 1; }

struct ConfigScan {
    const Hypergraph& h;
    std::vector<OpenRun> runs;
    bool cycle;
    int mu;

    explicit ConfigScan(const Hypergraph& hg) : h(hg) {
        runs = orderedRuns(hg);
        cycle = hg.shape() == Shape::Cycle;
        mu = hg.mu();
    }

    int s() const { return static_cast<int>(runs.size()); }

    // closed vertices strictly between run k and the following run
    int gapAfter(int k) const {
        int sCount = s();
        const OpenRun& a = runs[k];
        const OpenRun& b = runs[(k + 1) % sCount];
        int endA = a.start + a.length - 1;
        if (!cycle) return b.start - endA - 1;
        return (b.start - endA - 1 + mu) % mu;
    }

    bool lengthsAdmissible(int first, int cnt) const {
        int sCount = s();
        for (int t = 0; t < cnt; ++t) {
            int n = runs[(first + t) % sCount].length;
            int want = (t == 0 || t == cnt - 1) ? 1 : 2;
            if (n % 3 != want) return false;
        }
        return true;
    }

    bool innerGapsSingle(int first, int cnt) const {
        int sCount = s();
        for (int t = 0; t + 1 < cnt; ++t) {
            if (gapAfter((first + t) % sCount) != 1) return false;
        }
        return true;
    }

    TwoSpecialConfig build(int first, int cnt, bool wrapsWhole) const {
        int sCount = s();
        TwoSpecialConfig c;
        c.firstRun = first;
        c.runCount = cnt;
        c.wrapsWhole = wrapsWhole;
        for (int t = 0; t < cnt; ++t) {
            const OpenRun& r = runs[(first + t) % sCount];
            for (int i = 0; i < r.length; ++i)
                c.openVertices.push_back(cycle ? wrapPos(r.start + i, mu) : r.start + i);
        }
        c.closedVertices.push_back(runs[first].leftClosed);
        for (int t = 0; t + 1 < cnt; ++t)
            c.closedVertices.push_back(runs[(first + t) % sCount].rightClosed);
        int lastRight = runs[(first + cnt - 1) % sCount].rightClosed;
        if (!wrapsWhole || lastRight != c.closedVertices.front())
            c.closedVertices.push_back(lastRight);
        std::sort(c.openVertices.begin(), c.openVertices.end());
        std::sort(c.closedVertices.begin(), c.closedVertices.end());
        c.closedVertices.erase(std::unique(c.closedVertices.begin(), c.closedVertices.end()),
                               c.closedVertices.end());
        return c;
    }
};

} // namespace

std::pair<int, std::vector<int>> stringsOfOpens(const Hypergraph& h) {
    requireStringOrCycle(h);
    if (h.shape() == Shape::String && !validateSeparated(h))
        fail(Error::Code::NotSeparated, "strings of opens need closed endpoints");
    if (h.shape() == Shape::Cycle && h.closedCount() <= 1) {
        return {1, {h.mu() - 1}};
    }
    std::vector<OpenRun> runs = orderedRuns(h);
    std::vector<int> n;
    n.reserve(runs.size());
    for (const OpenRun& r : runs) n.push_back(r.length);
    return {static_cast<int>(runs.size()), n};
}

int bValue(const Hypergraph& h) {
    auto [s, n] = stringsOfOpens(h);
    int b = s;
    for (int ni : n) b += (ni - 1) / 3;
    return b;
}

std::vector<TwoSpecialConfig> twoSpecialConfigs(const Hypergraph& h) {
    requireStringOrCycle(h);
    std::vector<TwoSpecialConfig> out;
    if (h.shape() == Shape::Cycle && h.closedCount() <= 1) return out;

    ConfigScan scan(h);
    int s = scan.s();
    if (s < 2) return out;

    if (!scan.cycle) {
        for (int i = 0; i < s; ++i) {
            for (int j = i + 1; j < s; ++j) {
                int cnt = j - i + 1;
                if (!scan.innerGapsSingle(i, cnt)) break; // larger j only adds the bad gap
                if (scan.lengthsAdmissible(i, cnt)) out.push_back(scan.build(i, cnt, false));
            }
        }
        return out;
    }

    for (int i = 0; i < s; ++i) {
        for (int cnt = 2; cnt <= s; ++cnt) {
            if (!scan.innerGapsSingle(i, cnt)) break;
            if (!scan.lengthsAdmissible(i, cnt)) continue;
            if (cnt == s) {
                // covers every run; the configuration is the arc between the
                // two bounds, which coincide when the closing gap is a
                // single closed vertex
                int closing = scan.gapAfter((i + s - 1) % s);
                out.push_back(scan.build(i, cnt, closing == 1));
            } else {
                out.push_back(scan.build(i, cnt, false));
            }
        }
    }
    return out;
}

namespace {

// maximum count of pairwise run-disjoint configurations on a linear window
int linearPack(const std::vector<std::pair<int, int>>& intervals, int lo, int hi) {
    if (lo > hi) return 0;
    int len = hi - lo + 1;
    std::vector<int> best(len + 1, 0);
    for (int x = 0; x < len; ++x) {
        best[x + 1] = std::max(best[x + 1], best[x]);
        for (const auto& [a, b] : intervals) {
            if (a == lo + x && b <= hi) {
                best[b - lo + 1] = std::max(best[b - lo + 1], best[x] + 1);
            }
        }
    }
    int m = 0;
    for (int v : best) m = std::max(m, v);
    return m;
}

} // namespace

int modularity(const Hypergraph& h) {
    requireStringOrCycle(h);
    if (h.shape() == Shape::Cycle && h.closedCount() <= 1) return 0;
    std::vector<TwoSpecialConfig> configs = twoSpecialConfigs(h);
    if (configs.empty()) return 0;
    int s = static_cast<int>(orderedRuns(h).size());

    if (h.shape() == Shape::String) {
        std::vector<std::pair<int, int>> intervals;
        for (const auto& c : configs) intervals.emplace_back(c.firstRun, c.firstRun + c.runCount - 1);
        return linearPack(intervals, 0, s - 1);
    }

    // cycle: fix how run 0 is used, then pack the remaining arc linearly
    std::vector<std::pair<int, int>> plain; // non-wrapping intervals
    for (const auto& c : configs) {
        if (!c.wrapsWhole && c.firstRun + c.runCount <= s)
            plain.emplace_back(c.firstRun, c.firstRun + c.runCount - 1);
    }
    int best = linearPack(plain, 1, s - 1); // run 0 unused
    for (const auto& c : configs) {
        int i = c.firstRun, cnt = c.runCount;
        bool coversRun0 = cnt == s;
        if (!coversRun0) {
            for (int t = 0; t < cnt; ++t) {
                if ((i + t) % s == 0) coversRun0 = true;
            }
        }
        if (!coversRun0) continue;
        if (cnt == s) {
            best = std::max(best, 1);
            continue;
        }
        int after = (i + cnt) % s; // first run of the free arc
        int freeLen = s - cnt;
        std::vector<std::pair<int, int>> rotated;
        for (const auto& cc : configs) {
            if (cc.wrapsWhole || cc.runCount > freeLen) continue;
            int start = (cc.firstRun - after + s) % s;
            int end = start + cc.runCount - 1;
            if (end < freeLen) rotated.emplace_back(start, end);
        }
        best = std::max(best, 1 + linearPack(rotated, 0, freeLen - 1));
    }
    return best;
}

int pdFormula(const Hypergraph& h) {
    requireStringOrCycle(h);
    if (!validateSeparated(h)) fail(Error::Code::NotSeparated, "pd formula requires a separated hypergraph");
    return h.mu() - bValue(h) + modularity(h);
}

InvariantReport invariantReport(const Hypergraph& h) {
    InvariantReport r;
    auto [s, n] = stringsOfOpens(h);
    r.s = s;
    r.nList = n;
    r.b = bValue(h);
    r.modularity = modularity(h);
    r.pd = h.mu() - r.b + r.modularity;
    return r;
}

} // namespace strcyc
