#include "strcyc/simplicial.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "strcyc/bigint.hpp"

namespace strcyc {

bool SimplicialComplex::contains(uint32_t f) const {
    return std::binary_search(faces.begin(), faces.end(), f);
}

SimplicialComplex stanleyReisner(const MonomialIdeal& ideal) {
    int n = static_cast<int>(ideal.vars.size());
    if (n > 24) fail(Error::Code::TooManyVariables, "ground set limited to 24 variables");
    for (const Monomial& g : ideal.gens) {
        if (g.support == 0) fail(Error::Code::MalformedInput, "unit generator: ideal is not proper");
    }
    std::vector<uint32_t> supports;
    for (const Monomial& g : ideal.gens) supports.push_back(g.support);
    uint32_t full = n == 0 ? 0 : (n >= 32 ? 0xffffffffu : (uint32_t(1) << n) - 1);

    SimplicialComplex complex;
    complex.ground = ideal.vars;
    complex.faces = restrictedFaces(full, supports);
    return complex;
}

std::vector<uint32_t> restrictedFaces(uint32_t sigma, const std::vector<uint32_t>& supports) {
    std::vector<uint32_t> relevant;
    for (uint32_t s : supports) {
        if ((s & ~sigma) == 0) relevant.push_back(s);
    }
    std::vector<uint32_t> faces;
    // iterate all submasks of sigma, including the empty face
    uint32_t sub = sigma;
    while (true) {
        bool ok = true;
        for (uint32_t s : relevant) {
            if ((s & ~sub) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & sigma;
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

namespace {

// elementary collapses: repeatedly remove a pair (tau, rho) where rho is the
// unique face properly containing tau; preserves the homotopy type
void collapseFaces(std::unordered_set<uint32_t>& faces, uint32_t universe) {
    std::unordered_map<uint32_t, int> cofaces;
    cofaces.reserve(faces.size() * 2);
    for (uint32_t f : faces) {
        uint32_t rest = universe & ~f;
        while (rest) {
            uint32_t bit = rest & (~rest + 1);
            rest ^= bit;
            if (faces.count(f | bit)) ++cofaces[f];
        }
    }
    std::deque<uint32_t> queue;
    for (uint32_t f : faces) {
        if (cofaces[f] == 1) queue.push_back(f);
    }
    auto decrement = [&](uint32_t f) {
        auto it = cofaces.find(f);
        if (it != cofaces.end() && --it->second == 1 && faces.count(f)) queue.push_back(f);
    };
    while (!queue.empty()) {
        uint32_t tau = queue.front();
        queue.pop_front();
        if (!faces.count(tau)) continue;
        auto it = cofaces.find(tau);
        if (it == cofaces.end() || it->second != 1) continue;
        uint32_t rho = 0;
        uint32_t rest = universe & ~tau;
        bool found = false;
        while (rest) {
            uint32_t bit = rest & (~rest + 1);
            rest ^= bit;
            if (faces.count(tau | bit)) {
                rho = tau | bit;
                found = true;
                break;
            }
        }
        if (!found) continue;
        faces.erase(rho);
        faces.erase(tau);
        uint32_t rbits = rho;
        while (rbits) {
            uint32_t bit = rbits & (~rbits + 1);
            rbits ^= bit;
            uint32_t facet = rho & ~bit;
            if (facet != tau && faces.count(facet)) decrement(facet);
        }
        uint32_t tbits = tau;
        while (tbits) {
            uint32_t bit = tbits & (~tbits + 1);
            tbits ^= bit;
            uint32_t facet = tau & ~bit;
            if (faces.count(facet)) decrement(facet);
        }
    }
}

// exact rank of a sparse integer matrix: unit pivots first, then Bareiss on
// whatever dense remnant is left
struct SparseIntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::unordered_map<int, long long>> colEntries; // per column: row -> value

    void set(int r, int c, long long v) {
        if (v != 0) colEntries[c][r] = v;
    }
};

int bareissRank(std::vector<std::vector<BigInt>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    BigInt prev(1);
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!m[r][c].isZero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = c + 1; cc < cols; ++cc) {
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]).divExact(prev);
            }
            m[r][c] = BigInt(0);
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

int exactIntRank(SparseIntMatrix& mat) {
    // row-wise mirror for pivot selection
    std::vector<std::unordered_map<int, long long>> rowEntries(mat.rows);
    for (int c = 0; c < mat.cols; ++c) {
        for (auto& [r, v] : mat.colEntries[c]) rowEntries[r][c] = v;
    }
    std::vector<bool> rowDone(mat.rows, false), colDone(mat.cols, false);
    int rank = 0;
    bool overflow = false;
    while (!overflow) {
        // choose a +-1 pivot with minimal fill estimate
        int bestR = -1, bestC = -1;
        long long bestScore = -1;
        for (int c = 0; c < mat.cols; ++c) {
            if (colDone[c]) continue;
            for (auto& [r, v] : mat.colEntries[c]) {
                if (rowDone[r] || (v != 1 && v != -1)) continue;
                long long score = (long long)(rowEntries[r].size() - 1) *
                                  (long long)(mat.colEntries[c].size() - 1);
                if (bestScore < 0 || score < bestScore) {
                    bestScore = score;
                    bestR = r;
                    bestC = c;
                    if (score == 0) break;
                }
            }
            if (bestScore == 0) break;
        }
        if (bestR < 0) break;
        ++rank;
        rowDone[bestR] = true;
        colDone[bestC] = true;
        long long pv = mat.colEntries[bestC][bestR];
        std::vector<std::pair<int, long long>> colOthers, rowOthers;
        for (auto& [r, v] : mat.colEntries[bestC]) {
            if (r != bestR && !rowDone[r]) colOthers.emplace_back(r, v);
        }
        for (auto& [c, v] : rowEntries[bestR]) {
            if (c != bestC && !colDone[c]) rowOthers.emplace_back(c, v);
        }
        for (auto& [r, rv] : colOthers) {
            // precompute the whole row update; only apply when nothing
            // overflows, so every committed change is a valid row operation
            std::vector<std::pair<int, long long>> updates;
            updates.reserve(rowOthers.size());
            for (auto& [c, cv] : rowOthers) {
                long long prod = 0, delta = 0, updated = 0;
                auto it = mat.colEntries[c].find(r);
                long long cell = it == mat.colEntries[c].end() ? 0 : it->second;
                if (__builtin_mul_overflow(rv, cv, &prod) ||
                    __builtin_mul_overflow(prod, -pv, &delta) ||
                    __builtin_add_overflow(cell, delta, &updated)) {
                    overflow = true;
                    break;
                }
                updates.emplace_back(c, updated);
            }
            if (overflow) break;
            for (auto& [c, updated] : updates) {
                if (updated == 0) {
                    mat.colEntries[c].erase(r);
                    rowEntries[r].erase(c);
                } else {
                    mat.colEntries[c][r] = updated;
                    rowEntries[r][c] = updated;
                }
            }
            // the same row operation zeroes this row's pivot-column entry
            mat.colEntries[bestC].erase(r);
            rowEntries[r].erase(bestC);
        }
        if (overflow) {
            // abandon this pivot; the Bareiss remnant below sees a state
            // reached by whole-row operations only, so the rank is intact
            --rank;
            rowDone[bestR] = false;
            colDone[bestC] = false;
            break;
        }
        for (auto& [c, cv] : rowOthers) {
            (void)cv;
            mat.colEntries[c].erase(bestR);
        }
        rowEntries[bestR].clear();
        mat.colEntries[bestC].clear();
    }
    // dense Bareiss on the remnant without unit entries
    std::vector<int> liveRows, liveCols;
    for (int r = 0; r < mat.rows; ++r) {
        if (!rowDone[r] && !rowEntries[r].empty()) liveRows.push_back(r);
    }
    std::vector<bool> colLive(mat.cols, false);
    for (int r : liveRows) {
        for (auto& [c, v] : rowEntries[r]) {
            if (!colDone[c] && v != 0) colLive[c] = true;
        }
    }
    for (int c = 0; c < mat.cols; ++c) {
        if (colLive[c]) liveCols.push_back(c);
    }
    if (!liveRows.empty() && !liveCols.empty()) {
        std::vector<std::vector<BigInt>> dense(liveRows.size(),
                                               std::vector<BigInt>(liveCols.size(), BigInt(0)));
        for (size_t ri = 0; ri < liveRows.size(); ++ri) {
            for (size_t ci = 0; ci < liveCols.size(); ++ci) {
                auto it = rowEntries[liveRows[ri]].find(liveCols[ci]);
                if (it != rowEntries[liveRows[ri]].end()) dense[ri][ci] = BigInt(it->second);
            }
        }
        rank += bareissRank(std::move(dense));
    }
    return rank;
}

int gf2Rank(std::vector<std::vector<uint64_t>> rows, int cols) {
    int rank = 0;
    size_t nrows = rows.size();
    for (int c = 0; c < cols && rank < static_cast<int>(nrows); ++c) {
        int word = c / 64;
        uint64_t bit = uint64_t(1) << (c % 64);
        int pivot = -1;
        for (size_t r = rank; r < nrows; ++r) {
            if (rows[r][word] & bit) {
                pivot = static_cast<int>(r);
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < nrows; ++r) {
            if (static_cast<int>(r) != rank && (rows[r][word] & bit)) {
                for (size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<int> homologyOfFaces(std::vector<uint32_t> faceList, HomologyField field,
                                 bool collapse) {
    uint32_t universe = 0;
    for (uint32_t f : faceList) universe |= f;

    std::unordered_set<uint32_t> faces(faceList.begin(), faceList.end());
    if (collapse) collapseFaces(faces, universe);

    if (faces.empty()) return {};

    int maxDim = -1;
    for (uint32_t f : faces) maxDim = std::max(maxDim, __builtin_popcount(f) - 1);

    // faces grouped by dimension, each sorted for stable column indexing
    std::vector<std::vector<uint32_t>> byDim(maxDim + 2);
    for (uint32_t f : faces) byDim[__builtin_popcount(f)].push_back(f);
    for (auto& v : byDim) std::sort(v.begin(), v.end());

    std::vector<std::unordered_map<uint32_t, int>> index(maxDim + 2);
    for (int d = 0; d <= maxDim + 1; ++d) {
        for (size_t i = 0; i < byDim[d].size(); ++i) index[d][byDim[d][i]] = static_cast<int>(i);
    }

    // rank of the boundary map from dimension d to d-1 (popcount d+1 -> d)
    std::vector<int> boundaryRank(maxDim + 2, 0);
    for (int d = 0; d <= maxDim; ++d) {
        const auto& high = byDim[d + 1];
        const auto& low = byDim[d];
        if (high.empty() || low.empty()) continue;
        if (field == HomologyField::GF2) {
            int words = (static_cast<int>(high.size()) + 63) / 64;
            std::vector<std::vector<uint64_t>> rows(low.size(), std::vector<uint64_t>(words, 0));
            for (size_t c = 0; c < high.size(); ++c) {
                uint32_t f = high[c];
                uint32_t bits = f;
                while (bits) {
                    uint32_t bit = bits & (~bits + 1);
                    bits ^= bit;
                    auto it = index[d].find(f & ~bit);
                    if (it != index[d].end())
                        rows[it->second][c / 64] |= uint64_t(1) << (c % 64);
                }
            }
            boundaryRank[d + 1] = gf2Rank(std::move(rows), static_cast<int>(high.size()));
        } else {
            SparseIntMatrix mat;
            mat.rows = static_cast<int>(low.size());
            mat.cols = static_cast<int>(high.size());
            mat.colEntries.resize(mat.cols);
            for (size_t c = 0; c < high.size(); ++c) {
                uint32_t f = high[c];
                int sign = 1;
                for (int v = 0; v < 32; ++v) {
                    uint32_t bit = uint32_t(1) << v;
                    if (!(f & bit)) continue;
                    auto it = index[d].find(f & ~bit);
                    if (it != index[d].end()) mat.set(it->second, static_cast<int>(c), sign);
                    sign = -sign;
                }
            }
            boundaryRank[d + 1] = exactIntRank(mat);
        }
    }

    // boundaryRank[k] holds the rank of the map from popcount-k faces to
    // popcount-(k-1) faces. For dimension d (popcount d+1):
    std::vector<int> ranks(maxDim + 2, 0); // ranks[d+1] = reduced homology in dim d
    for (int d = -1; d <= maxDim; ++d) {
        int fd = static_cast<int>(byDim[d + 1].size());
        int out = d + 1 >= 1 ? boundaryRank[d + 1] : 0;
        int in = d + 2 <= maxDim + 1 ? boundaryRank[d + 2] : 0;
        ranks[d + 1] = fd - out - in;
    }
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return ranks;
}

std::vector<int> reducedHomologyRanks(const SimplicialComplex& complex, HomologyField field,
                                      bool collapse) {
    return homologyOfFaces(complex.faces, field, collapse);
}

} // namespace strcyc
