#include "strcyc/monomial_ideal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace strcyc {

int MonomialIdeal::varIndex(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) return static_cast<int>(i);
    }
    return -1;
}

std::string MonomialIdeal::monomialText(const Monomial& m) const {
    if (m.support == 0) return "1";
    std::string s;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (m.support & (uint32_t(1) << i)) {
            if (!s.empty()) s += "*";
            s += vars[i];
        }
    }
    return s;
}

std::string MonomialIdeal::generatorsText() const {
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += monomialText(gens[i]);
    }
    return s;
}

namespace {

std::string faceName(const Hypergraph& h, Face f) {
    int pc = __builtin_popcount(f);
    std::vector<int> vs;
    for (int v = 1; v <= h.mu(); ++v) {
        if (f & (Face(1) << (v - 1))) vs.push_back(v);
    }
    if (pc == 1) return "v" + std::to_string(vs[0]);
    if (pc == 2 && h.shape() != Shape::General) {
        // name structurally consecutive pairs as edges, in traversal order
        const auto& ord = h.order();
        for (int p = 0; p < h.mu(); ++p) {
            int a = ord[p];
            int b = (p + 1 < h.mu()) ? ord[p + 1] : ord[0];
            if (p + 1 == h.mu() && h.shape() != Shape::Cycle) break;
            Face edge = (Face(1) << (a - 1)) | (Face(1) << (b - 1));
            if (edge == f) {
                std::string sa = std::to_string(a), sb = std::to_string(b);
                std::string sep = (sa.size() > 1 || sb.size() > 1) ? "_" : "";
                return "e" + sa + sep + sb;
            }
        }
    }
    std::string s = "f";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += "_";
        s += std::to_string(vs[i]);
    }
    return s;
}

} // namespace

MonomialIdeal canonicalIdeal(const Hypergraph& h) {
    if (!validateSeparated(h))
        fail(Error::Code::NotSeparated, "canonical ideal requires a separated hypergraph");

    // ambient order: edges along the structure, singletons ascending, rest
    std::vector<Face> ordered;
    const auto& ord = h.order();
    if (h.shape() != Shape::General) {
        for (int p = 0; p + 1 < h.mu(); ++p)
            ordered.push_back((Face(1) << (ord[p] - 1)) | (Face(1) << (ord[p + 1] - 1)));
        if (h.shape() == Shape::Cycle)
            ordered.push_back((Face(1) << (ord[h.mu() - 1] - 1)) | (Face(1) << (ord[0] - 1)));
        for (int v = 1; v <= h.mu(); ++v)
            if (h.closed(v)) ordered.push_back(Face(1) << (v - 1));
    } else {
        std::vector<Face> singles, rest;
        for (Face f : h.faces()) {
            (__builtin_popcount(f) == 1 ? singles : rest).push_back(f);
        }
        ordered.insert(ordered.end(), rest.begin(), rest.end());
        ordered.insert(ordered.end(), singles.begin(), singles.end());
    }
    if (ordered.size() > 32) fail(Error::Code::TooManyVariables, "more than 32 faces");

    MonomialIdeal ideal;
    for (Face f : ordered) ideal.vars.push_back(faceName(h, f));
    ideal.gens.resize(h.mu());
    for (int j = 1; j <= h.mu(); ++j) {
        uint32_t sup = 0;
        for (size_t i = 0; i < ordered.size(); ++i) {
            if (ordered[i] & (Face(1) << (j - 1))) sup |= uint32_t(1) << i;
        }
        ideal.gens[j - 1] = Monomial{sup};
    }
    return ideal;
}

Hypergraph associatedHypergraph(const MonomialIdeal& ideal) {
    int mu = static_cast<int>(ideal.gens.size());
    if (mu < 1) fail(Error::Code::MalformedInput, "ideal has no generators");
    if (mu > 31) fail(Error::Code::TooManyVariables, "too many generators");
    for (int i = 0; i < mu; ++i) {
        if (ideal.gens[i].support == 0)
            fail(Error::Code::MalformedInput, "unit generator");
        for (int j = 0; j < mu; ++j) {
            if (i != j && ideal.gens[i].divides(ideal.gens[j]))
                fail(Error::Code::NotMinimal, "generator divides another generator");
        }
    }
    std::vector<Face> faces;
    for (size_t v = 0; v < ideal.vars.size(); ++v) {
        Face f = 0;
        for (int j = 0; j < mu; ++j) {
            if (ideal.gens[j].support & (uint32_t(1) << v)) f |= Face(1) << j;
        }
        if (f) faces.push_back(f);
    }
    return Hypergraph::fromFaces(mu, std::move(faces));
}

std::vector<Monomial> minimalGenerators(const std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < gens.size() && keep; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && gens[j].support != gens[i].support) keep = false;
            // among equal monomials keep only the first occurrence
            if (gens[j].support == gens[i].support && j < i) keep = false;
        }
        if (keep) out.push_back(gens[i]);
    }
    return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
    MonomialIdeal out;
    out.vars = ideal.vars;
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens.size());
    for (const Monomial& g : ideal.gens) gens.push_back(Monomial{g.support & ~m.support});
    for (const Monomial& g : gens) {
        if (g.support == 0) {
            // m lies in the ideal; the colon is the unit ideal
            out.gens = {Monomial{0}};
            return out;
        }
    }
    out.gens = minimalGenerators(gens);
    return out;
}

namespace {

void heightSearch(const std::vector<Monomial>& gens, uint32_t chosen, int count,
                  size_t next, int& best) {
    if (count >= best) return;
    // first generator not yet hit
    size_t idx = next;
    while (idx < gens.size() && (gens[idx].support & chosen)) ++idx;
    if (idx == gens.size()) {
        best = count;
        return;
    }
    uint32_t sup = gens[idx].support;
    while (sup) {
        uint32_t bit = sup & (~sup + 1);
        sup ^= bit;
        heightSearch(gens, chosen | bit, count + 1, idx + 1, best);
    }
}

} // namespace

int height(const MonomialIdeal& ideal) {
    if (ideal.gens.empty()) fail(Error::Code::MalformedInput, "height of the zero ideal");
    for (const Monomial& g : ideal.gens) {
        if (g.support == 0) fail(Error::Code::MalformedInput, "height of the unit ideal");
    }
    int best = static_cast<int>(ideal.gens.size());
    heightSearch(ideal.gens, 0, 0, 0, best);
    return best;
}

MonomialIdeal subIdeal(const MonomialIdeal& ideal, int from) {
    if (from < 0 || from > static_cast<int>(ideal.gens.size()))
        fail(Error::Code::OutOfRange, "subIdeal index out of range");
    MonomialIdeal out;
    out.vars = ideal.vars;
    out.gens.assign(ideal.gens.begin() + from, ideal.gens.end());
    return out;
}

MonomialIdeal parseIdealText(const std::string& text, const std::vector<std::string>& ring) {
    MonomialIdeal ideal;
    ideal.vars = ring;
    if (ring.size() > 32) fail(Error::Code::TooManyVariables, "ring limited to 32 variables");

    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return s.substr(a, b - a + 1);
    };

    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        part = trim(part);
        if (part.empty()) fail(Error::Code::MalformedInput, "empty generator");
        uint32_t sup = 0;
        std::istringstream ts(part);
        std::string factor;
        while (std::getline(ts, factor, '*')) {
            factor = trim(factor);
            int expo = 1;
            size_t caret = factor.find('^');
            if (caret != std::string::npos) {
                try {
                    expo = std::stoi(factor.substr(caret + 1));
                } catch (...) {
                    fail(Error::Code::MalformedInput, "bad exponent in '" + factor + "'");
                }
                factor = trim(factor.substr(0, caret));
            }
            if (expo > 1) fail(Error::Code::NotSquarefree, "exponent above 1: " + part);
            if (expo < 1) fail(Error::Code::MalformedInput, "bad exponent in '" + part + "'");
            int vi = ideal.varIndex(factor);
            if (vi < 0) fail(Error::Code::MalformedInput, "unknown variable '" + factor + "'");
            uint32_t bit = uint32_t(1) << vi;
            if (sup & bit) fail(Error::Code::NotSquarefree, "repeated variable in '" + part + "'");
            sup |= bit;
        }
        ideal.gens.push_back(Monomial{sup});
    }
    if (ideal.gens.empty()) fail(Error::Code::MalformedInput, "no generators");
    return ideal;
}

} // namespace strcyc
