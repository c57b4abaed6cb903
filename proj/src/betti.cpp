#include "strcyc/betti.hpp"

#include <algorithm>
#include <set>

namespace strcyc {

namespace {

std::vector<uint32_t> lcmLatticeSigmas(const std::vector<uint32_t>& supports) {
    std::set<uint32_t> sigmas;
    size_t mu = supports.size();
    if (mu > 20) fail(Error::Code::TooManyVariables, "too many generators for the lattice sweep");
    for (uint32_t subset = 1; subset < (uint32_t(1) << mu); ++subset) {
        uint32_t u = 0;
        for (size_t j = 0; j < mu; ++j) {
            if (subset & (uint32_t(1) << j)) u |= supports[j];
        }
        sigmas.insert(u);
    }
    return {sigmas.begin(), sigmas.end()};
}

} // namespace

BettiTable bettiTable(const MonomialIdeal& ideal, HomologyField field, bool prune, bool collapse) {
    int n = static_cast<int>(ideal.vars.size());
    if (n > 24) fail(Error::Code::TooManyVariables, "ambient ring limited to 24 variables");
    if (ideal.gens.empty()) fail(Error::Code::MalformedInput, "Betti table of the zero ideal");
    std::vector<uint32_t> supports;
    for (const Monomial& g : ideal.gens) {
        if (g.support == 0)
            fail(Error::Code::MalformedInput, "Betti table of a non-proper ideal");
        supports.push_back(g.support);
    }

    std::vector<uint32_t> sigmas;
    if (prune) {
        sigmas = lcmLatticeSigmas(supports);
    } else {
        if (n > 20) fail(Error::Code::TooManyVariables, "unpruned sweep limited to 20 variables");
        for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) sigmas.push_back(s);
    }

    BettiTable table;
    table.pd = 0;
    for (uint32_t sigma : sigmas) {
        std::vector<uint32_t> faces = restrictedFaces(sigma, supports);
        std::vector<int> ranks = homologyOfFaces(std::move(faces), field, collapse);
        int size = __builtin_popcount(sigma);
        for (int d = -1; d + 1 < static_cast<int>(ranks.size()); ++d) {
            int rank = ranks[d + 1];
            if (rank == 0) continue;
            int i = size - d - 1;
            table.entries.push_back(BettiEntry{i, sigma, rank});
            table.pd = std::max(table.pd, i);
        }
    }
    std::sort(table.entries.begin(), table.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
        if (a.homologicalDegree != b.homologicalDegree)
            return a.homologicalDegree < b.homologicalDegree;
        return a.sigma < b.sigma;
    });
    return table;
}

int pdOracle(const MonomialIdeal& ideal, HomologyField field) {
    return bettiTable(ideal, field).pd;
}

} // namespace strcyc
