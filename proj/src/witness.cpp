#include "strcyc/witness.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace strcyc {

namespace {

// current index (1-based) -> sorted set of original generator indices
using Base = std::vector<std::vector<int>>;

struct Builder {
    std::vector<WitnessPoly> polys;
    std::vector<std::string> trace;

    WitnessTerm term(const Base& base, std::initializer_list<int> idxs) {
        std::set<int> acc;
        for (int i : idxs) {
            for (int orig : base[i - 1]) {
                bool fresh = acc.insert(orig).second;
                if (!fresh)
                    fail(Error::Code::Internal, "witness term repeats a generator");
            }
        }
        WitnessTerm t;
        t.gens.assign(acc.begin(), acc.end());
        return t;
    }

    void emit(std::vector<WitnessTerm> terms) {
        for (size_t i = 0; i < terms.size(); ++i) {
            for (size_t j = i + 1; j < terms.size(); ++j) {
                if (terms[i] == terms[j])
                    fail(Error::Code::Internal, "witness polynomial repeats a term");
            }
        }
        polys.push_back(WitnessPoly{std::move(terms)});
    }

    static std::string show(const Base& base, int i) {
        std::string s = "{";
        const auto& set = base[i - 1];
        for (size_t k = 0; k < set.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(set[k]);
        }
        return s + "}";
    }

    void note(const std::string& msg) { trace.push_back(msg); }
};

int wrapPos(int x, int mu) { return (x - 1 + mu) % mu + 1; }

struct FlagRun {
    int start = 0;
    int length = 0;
};

// maximal open runs over the flags, wrapping when cyclic; assumes at least
// one closed vertex for cycles
std::vector<FlagRun> flagRuns(const std::vector<bool>& closedFlags, bool cyclic) {
    int mu = static_cast<int>(closedFlags.size());
    std::vector<FlagRun> runs;
    if (!cyclic) {
        int i = 0;
        while (i < mu) {
            if (!closedFlags[i]) {
                int j = i;
                while (j < mu && !closedFlags[j]) ++j;
                runs.push_back(FlagRun{i + 1, j - i});
                i = j;
            } else {
                ++i;
            }
        }
        return runs;
    }
    int firstClosed = -1;
    for (int i = 0; i < mu; ++i) {
        if (closedFlags[i]) {
            firstClosed = i;
            break;
        }
    }
    assert(firstClosed >= 0);
    int i = firstClosed, seen = 0;
    while (seen < mu) {
        int next = (i + 1) % mu;
        if (!closedFlags[next]) {
            int len = 0, j = next;
            while (!closedFlags[j]) {
                ++len;
                j = (j + 1) % mu;
            }
            runs.push_back(FlagRun{next + 1, len});
            seen += len + 1;
            i = j;
        } else {
            ++seen;
            i = next;
        }
    }
    return runs;
}

void stringCore(std::vector<bool> flags, Base base, Builder& b);
void cycleCore(std::vector<bool> flags, Base base, Builder& b);

void stringCore(std::vector<bool> flags, Base base, Builder& b) {
    int mu = static_cast<int>(flags.size());
    if (mu == 1) {
        b.note("string: single generator " + Builder::show(base, 1));
        b.emit({b.term(base, {1})});
        return;
    }
    if (mu == 2) {
        b.note("string: two-vertex base");
        b.emit({b.term(base, {1})});
        b.emit({b.term(base, {2})});
        return;
    }
    if (mu == 3) {
        if (flags[1]) {
            b.note("string: saturated three-vertex base");
            b.emit({b.term(base, {1})});
            b.emit({b.term(base, {2})});
            b.emit({b.term(base, {3})});
        } else {
            b.note("string: open-middle base " + Builder::show(base, 2));
            b.emit({b.term(base, {2})});
            b.emit({b.term(base, {1}), b.term(base, {3})});
        }
        return;
    }
    if (flags[1]) {
        b.note("string: peel closed-neighbor generator " + Builder::show(base, 1));
        b.emit({b.term(base, {1})});
        std::vector<bool> sub(flags.begin() + 1, flags.end());
        sub[0] = true;
        Base sb(base.begin() + 1, base.end());
        stringCore(std::move(sub), std::move(sb), b);
    } else {
        b.note("string: peel open pair " + Builder::show(base, 1) + "," + Builder::show(base, 2) +
               "," + Builder::show(base, 3));
        b.emit({b.term(base, {2})});
        b.emit({b.term(base, {1}), b.term(base, {3})});
        std::vector<bool> sub(flags.begin() + 3, flags.end());
        sub[0] = true;
        Base sb(base.begin() + 3, base.end());
        stringCore(std::move(sub), std::move(sb), b);
    }
}

// rotate so that old position (r+1) becomes position 1
template <typename T>
std::vector<T> rotated(const std::vector<T>& v, int r) {
    int n = static_cast<int>(v.size());
    std::vector<T> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(v[(i + r) % n]);
    return out;
}

void fewClosedCycle(const std::vector<bool>& flags, const Base& base, Builder& b) {
    int mu = static_cast<int>(flags.size());
    int rot = 0;
    for (int i = 0; i < mu; ++i) {
        if (flags[i]) {
            rot = i;
            break;
        }
    }
    Base rb = rotated(base, rot);
    int m = mu / 3;
    b.note("cycle: few-closed construction mu=" + std::to_string(mu) +
           " residue=" + std::to_string(mu % 3));
    if (mu % 3 == 0) {
        b.emit({b.term(rb, {2})});
        b.emit({b.term(rb, {1}), b.term(rb, {3})});
        for (int i = 1; i <= m - 1; ++i) {
            b.emit({b.term(rb, {3 * i + 2})});
            b.emit({b.term(rb, {3 * i + 1}), b.term(rb, {3 * i + 3})});
        }
    } else if (mu % 3 == 1) {
        for (int i = 0; i <= m - 1; ++i) {
            b.emit({b.term(rb, {3 * i + 3})});
            b.emit({b.term(rb, {3 * i + 2}), b.term(rb, {3 * i + 4})});
        }
        b.emit({b.term(rb, {1})});
    } else {
        b.emit({b.term(rb, {2})});
        b.emit({b.term(rb, {3}), b.term(rb, {5})});
        for (int i = 1; i <= m - 1; ++i) {
            b.emit({b.term(rb, {3 * i + 1}), b.term(rb, {3 * i + 3})});
            b.emit({b.term(rb, {3 * i + 3}), b.term(rb, {3 * i + 5})});
        }
        b.emit({b.term(rb, {1}), b.term(rb, {3 * m + 1})});
    }
}

void smallCycle(const std::vector<bool>& flags, const Base& base, Builder& b) {
    int mu = static_cast<int>(flags.size());
    bool saturated = std::all_of(flags.begin(), flags.end(), [](bool c) { return c; });
    if (saturated) {
        b.note("cycle: saturated base mu=" + std::to_string(mu));
        for (int j = 1; j <= mu; ++j) b.emit({b.term(base, {j})});
        return;
    }
    int v = 0;
    for (int j = 1; j <= mu; ++j) {
        if (!flags[j - 1]) {
            v = j;
            break;
        }
    }
    int prev = wrapPos(v - 1, mu), next = wrapPos(v + 1, mu);
    b.note("cycle: small base around open vertex " + Builder::show(base, v));
    if (mu == 3) {
        b.emit({b.term(base, {v})});
        b.emit({b.term(base, {std::min(prev, next)}), b.term(base, {std::max(prev, next)})});
    } else {
        int opposite = wrapPos(v + 2, mu);
        b.emit({b.term(base, {v})});
        b.emit({b.term(base, {std::min(prev, next)}), b.term(base, {std::max(prev, next)})});
        b.emit({b.term(base, {opposite})});
    }
}

void cycleCore(std::vector<bool> flags, Base base, Builder& b) {
    int mu = static_cast<int>(flags.size());
    int closedCount = static_cast<int>(std::count(flags.begin(), flags.end(), true));

    if (closedCount <= 1) {
        fewClosedCycle(flags, base, b);
        return;
    }
    if (mu <= 4) {
        smallCycle(flags, base, b);
        return;
    }

    // adjacent closed pair: reduce to a string through the opposite arc
    int adjacent = 0;
    for (int u = 1; u <= mu; ++u) {
        if (flags[u - 1] && flags[wrapPos(u + 1, mu) - 1]) {
            adjacent = u;
            break;
        }
    }
    if (adjacent) {
        int rot = adjacent % mu; // position adjacent+1 becomes 1
        std::vector<bool> rf = rotated(flags, rot);
        Base rb = rotated(base, rot);
        if (rf[1]) {
            b.note("cycle: split at adjacent closed pair, peel " + Builder::show(rb, 1));
            b.emit({b.term(rb, {1})});
            std::vector<bool> sub(rf.begin() + 1, rf.end());
            sub.front() = true;
            sub.back() = true;
            Base sb(rb.begin() + 1, rb.end());
            stringCore(std::move(sub), std::move(sb), b);
        } else {
            b.note("cycle: split at adjacent closed pair, open pair " + Builder::show(rb, 1) +
                   "," + Builder::show(rb, 2) + "," + Builder::show(rb, 3));
            b.emit({b.term(rb, {2})});
            b.emit({b.term(rb, {1}), b.term(rb, {3})});
            std::vector<bool> sub(rf.begin() + 3, rf.end());
            sub.front() = true;
            sub.back() = true;
            Base sb(rb.begin() + 3, rb.end());
            stringCore(std::move(sub), std::move(sb), b);
        }
        return;
    }

    std::vector<FlagRun> runs = flagRuns(flags, true);
    std::sort(runs.begin(), runs.end(),
              [](const FlagRun& a, const FlagRun& c) { return a.start < c.start; });

    for (const FlagRun& r : runs) {
        if (r.length % 3 == 0) {
            int u1 = r.start, u2 = wrapPos(r.start + 1, mu), u3 = wrapPos(r.start + 2, mu);
            b.note("cycle: excise open triple " + Builder::show(base, u1) + "," +
                   Builder::show(base, u2) + "," + Builder::show(base, u3));
            b.emit({b.term(base, {u2})});
            b.emit({b.term(base, {u1}), b.term(base, {u3})});
            std::vector<bool> sub(mu - 3);
            Base sb(mu - 3);
            for (int i = 1; i <= mu - 3; ++i) {
                int pos = wrapPos(r.start + 2 + i, mu);
                sub[i - 1] = flags[pos - 1];
                sb[i - 1] = base[pos - 1];
            }
            sub.front() = true; // the far neighbor of the triple becomes closed
            stringCore(std::move(sub), std::move(sb), b);
            return;
        }
    }

    for (const FlagRun& r : runs) {
        if (r.length >= 3) {
            int pos = r.length % 3 == 1 ? wrapPos(r.start + 1, mu) : wrapPos(r.start + 2, mu);
            b.note("cycle: close run vertex " + Builder::show(base, pos));
            flags[pos - 1] = true;
            cycleCore(std::move(flags), std::move(base), b);
            return;
        }
    }

    for (const FlagRun& r : runs) {
        if (r.length == 2) {
            int p = r.start;
            int left = wrapPos(p - 1, mu), right = wrapPos(p + 2, mu);
            b.emit({b.term(base, {right}), b.term(base, {p})});
            b.emit({b.term(base, {left}), b.term(base, {wrapPos(p + 1, mu)})});
            if (mu == 5) {
                // the merged generator is a multiple of the only remaining
                // one, so the contracted hypergraph collapses to a point
                int survivor = wrapPos(p + 3, mu);
                b.note("cycle: contract open pair at " + Builder::show(base, p) +
                       "; survivor " + Builder::show(base, survivor));
                b.emit({b.term(base, {survivor})});
                return;
            }
            b.note("cycle: contract open pair at " + Builder::show(base, p) +
                   ", merged generator " + Builder::show(base, left) + "*" +
                   Builder::show(base, right));
            std::vector<bool> sub(mu - 3);
            Base sb(mu - 3);
            sub[0] = true;
            std::set<int> merged(base[left - 1].begin(), base[left - 1].end());
            merged.insert(base[right - 1].begin(), base[right - 1].end());
            sb[0].assign(merged.begin(), merged.end());
            for (int i = 2; i <= mu - 3; ++i) {
                int pos = wrapPos(p + 1 + i, mu);
                sub[i - 1] = flags[pos - 1];
                sb[i - 1] = base[pos - 1];
            }
            cycleCore(std::move(sub), std::move(sb), b);
            return;
        }
    }

    // alternating closed/open cycle from here on
    if (mu % 2 != 0) fail(Error::Code::Internal, "expected an alternating cycle");
    int rot = flags[0] ? 0 : 1;
    std::vector<bool> rf = rotated(flags, rot);
    Base rb = rotated(base, rot);
    for (int i = 0; i < mu; ++i) {
        if (rf[i] != (i % 2 == 0)) fail(Error::Code::Internal, "expected an alternating cycle");
    }

    if (mu % 4 == 0) {
        int m = mu / 4;
        b.note("cycle: alternating groups m=" + std::to_string(m));
        for (int g = 0; g < m; ++g) {
            int s0 = 4 * g;
            b.emit({b.term(rb, {s0 + 2})});
            b.emit({b.term(rb, {s0 + 1}), b.term(rb, {s0 + 3})});
            b.emit({b.term(rb, {s0 + 4})});
        }
        return;
    }
    if (mu == 6) {
        b.note("cycle: alternating six base");
        b.emit({b.term(rb, {2})});
        b.emit({b.term(rb, {4})});
        b.emit({b.term(rb, {6})});
        b.emit({b.term(rb, {1}), b.term(rb, {3}), b.term(rb, {5})});
        return;
    }
    b.note("cycle: alternating contract, merged generator " + Builder::show(rb, 1) + "*" +
           Builder::show(rb, mu - 3));
    b.emit({b.term(rb, {mu})});
    b.emit({b.term(rb, {mu - 2})});
    b.emit({b.term(rb, {1}), b.term(rb, {mu - 1}), b.term(rb, {mu - 3})});
    int subMu = mu - 4;
    std::vector<bool> sub(subMu);
    Base sb(subMu);
    sub[0] = true;
    std::set<int> merged(rb[0].begin(), rb[0].end());
    merged.insert(rb[mu - 4].begin(), rb[mu - 4].end());
    sb[0].assign(merged.begin(), merged.end());
    for (int i = 2; i <= subMu; ++i) {
        sub[i - 1] = rf[i - 1];
        sb[i - 1] = rb[i - 1];
    }
    cycleCore(std::move(sub), std::move(sb), b);
}

void checkStructure(const Witness& w, const Hypergraph& h, size_t maxTerms) {
    std::set<int> seen;
    for (const auto& poly : w.polys) {
        if (poly.terms.empty() || poly.terms.size() > maxTerms)
            fail(Error::Code::Internal, "witness polynomial has a bad term count");
        for (const auto& t : poly.terms) {
            if (t.gens.empty()) fail(Error::Code::Internal, "empty witness term");
            for (int g : t.gens) {
                if (g < 1 || g > h.mu()) fail(Error::Code::Internal, "witness index out of range");
                seen.insert(g);
            }
        }
    }
    if (static_cast<int>(seen.size()) != h.mu())
        fail(Error::Code::Internal, "witness does not touch every generator");
}

Base identityBase(const Hypergraph& h) {
    Base base(h.mu());
    for (int p = 0; p < h.mu(); ++p) base[p] = {h.order()[p]};
    return base;
}

std::vector<bool> structuralFlags(const Hypergraph& h) {
    std::vector<bool> flags(h.mu());
    for (int p = 0; p < h.mu(); ++p) flags[p] = h.closed(h.order()[p]);
    return flags;
}

} // namespace

Witness stringWitness(const Hypergraph& h) {
    if (h.shape() != Shape::String)
        fail(Error::Code::UnsupportedShape, "stringWitness requires a string hypergraph");
    if (!validateSeparated(h))
        fail(Error::Code::NotSeparated, "stringWitness requires a separated hypergraph");
    Builder b;
    stringCore(structuralFlags(h), identityBase(h), b);
    Witness w{std::move(b.polys), std::move(b.trace)};
    checkStructure(w, h, 2);
    return w;
}

Witness cycleWitness(const Hypergraph& h) {
    if (h.shape() != Shape::Cycle)
        fail(Error::Code::UnsupportedShape, "cycleWitness requires a cycle hypergraph");
    if (!validateSeparated(h))
        fail(Error::Code::NotSeparated, "cycleWitness requires a separated hypergraph");
    Builder b;
    cycleCore(structuralFlags(h), identityBase(h), b);
    Witness w{std::move(b.polys), std::move(b.trace)};
    checkStructure(w, h, 3);
    return w;
}

Witness witnessFor(const Hypergraph& h) {
    if (h.shape() == Shape::String) return stringWitness(h);
    if (h.shape() == Shape::Cycle) return cycleWitness(h);
    fail(Error::Code::UnsupportedShape, "witness synthesis covers strings and cycles only");
}

std::vector<Polynomial> expandWitness(const Witness& w, const MonomialIdeal& ideal) {
    MonomialOrder order;
    int nvars = static_cast<int>(ideal.vars.size());
    std::vector<Polynomial> out;
    out.reserve(w.polys.size());
    for (const auto& poly : w.polys) {
        std::vector<PolyTerm> terms;
        for (const auto& t : poly.terms) {
            uint32_t support = 0;
            for (int g : t.gens) {
                if (g < 1 || g > static_cast<int>(ideal.gens.size()))
                    fail(Error::Code::OutOfRange, "witness index beyond the generator list");
                uint32_t s = ideal.gens[g - 1].support;
                if (support & s)
                    fail(Error::Code::NonSquarefreeProduct,
                         "witness term multiplies generators sharing a variable");
                support |= s;
            }
            Expo e(nvars, 0);
            for (int i = 0; i < nvars; ++i) {
                if (support & (uint32_t(1) << i)) e[i] = 1;
            }
            terms.push_back({std::move(e), BigInt(1)});
        }
        Polynomial p(std::move(terms), order);
        if (p.termCount() != poly.terms.size())
            fail(Error::Code::Internal, "witness terms expanded to a repeated monomial");
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace strcyc
