#include "strcyc/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace strcyc {

namespace {

int wrap1(int x, int mu) { return (x - 1 + mu) % mu + 1; }

std::vector<bool> patternToFlags(const std::string& pattern) {
    std::vector<bool> flags;
    flags.reserve(pattern.size());
    for (char c : pattern) {
        if (c == 'c') {
            flags.push_back(true);
        } else if (c == 'o') {
            flags.push_back(false);
        } else {
            fail(Error::Code::MalformedInput,
                 std::string("pattern may contain only 'c' and 'o', got '") + c + "'");
        }
    }
    return flags;
}

} // namespace

int Hypergraph::closedCount() const {
    return static_cast<int>(std::count(closed_.begin(), closed_.end(), true));
}

bool Hypergraph::orderIsIdentity() const {
    for (int i = 0; i < mu_; ++i) {
        if (order_[i] != i + 1) return false;
    }
    return true;
}

void Hypergraph::deriveFacesFromPattern() {
    faces_.clear();
    for (int p = 1; p < mu_; ++p) {
        Face f = (Face(1) << (order_[p - 1] - 1)) | (Face(1) << (order_[p] - 1));
        faces_.push_back(f);
    }
    if (shape_ == Shape::Cycle) {
        faces_.push_back((Face(1) << (order_[mu_ - 1] - 1)) | (Face(1) << (order_[0] - 1)));
    }
    for (int v = 1; v <= mu_; ++v) {
        if (closed_[v - 1]) faces_.push_back(Face(1) << (v - 1));
    }
    std::sort(faces_.begin(), faces_.end());
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

void Hypergraph::deriveStatusFromFaces() {
    closed_.assign(mu_, false);
    for (Face f : faces_) {
        if ((f & (f - 1)) == 0) {
            int v = 0;
            Face t = f;
            while (t >>= 1) ++v;
            closed_[v] = true;
        }
    }
}

void Hypergraph::classifyShape() {
    shape_ = Shape::General;
    order_.resize(mu_);
    std::iota(order_.begin(), order_.end(), 1);

    std::vector<Face> pairs;
    for (Face f : faces_) {
        int pc = __builtin_popcount(f);
        if (pc == 2) {
            pairs.push_back(f);
        } else if (pc > 2) {
            return;
        }
    }

    std::vector<std::vector<int>> adj(mu_ + 1);
    for (Face f : pairs) {
        int a = __builtin_ctz(f) + 1;
        int b = 32 - __builtin_clz(f);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    auto walkFrom = [&](int startVertex) {
        std::vector<int> seq{startVertex};
        std::vector<bool> seen(mu_ + 1, false);
        seen[startVertex] = true;
        int cur = startVertex;
        while (true) {
            int next = 0;
            for (int nb : adj[cur]) {
                if (!seen[nb]) {
                    if (next == 0 || nb < next) next = nb;
                }
            }
            if (next == 0) break;
            seen[next] = true;
            seq.push_back(next);
            cur = next;
        }
        return seq;
    };

    if (static_cast<int>(pairs.size()) == mu_ - 1 && mu_ >= 2) {
        int deg1 = 0, startVertex = 0;
        bool degOk = true;
        for (int v = 1; v <= mu_; ++v) {
            size_t d = adj[v].size();
            if (d == 0 || d > 2) degOk = false;
            if (d == 1) {
                ++deg1;
                if (startVertex == 0) startVertex = v;
            }
        }
        if (degOk && deg1 == 2) {
            std::vector<int> seq = walkFrom(startVertex);
            if (static_cast<int>(seq.size()) == mu_) {
                shape_ = Shape::String;
                order_ = seq;
                return;
            }
        }
    }
    if (static_cast<int>(pairs.size()) == mu_ && mu_ >= 3) {
        bool degOk = true;
        for (int v = 1; v <= mu_; ++v) {
            if (adj[v].size() != 2) degOk = false;
        }
        if (degOk) {
            std::vector<int> seq = walkFrom(1);
            if (static_cast<int>(seq.size()) == mu_) {
                shape_ = Shape::Cycle;
                order_ = seq;
                return;
            }
        }
    }
}

Hypergraph Hypergraph::stringFromPattern(const std::string& pattern) {
    Hypergraph h;
    h.closed_ = patternToFlags(pattern);
    h.mu_ = static_cast<int>(h.closed_.size());
    if (h.mu_ < 2) fail(Error::Code::TooFewVertices, "string hypergraph needs at least 2 vertices");
    h.shape_ = Shape::String;
    h.order_.resize(h.mu_);
    std::iota(h.order_.begin(), h.order_.end(), 1);
    h.deriveFacesFromPattern();
    return h;
}

Hypergraph Hypergraph::cycleFromPattern(const std::string& pattern) {
    Hypergraph h;
    h.closed_ = patternToFlags(pattern);
    h.mu_ = static_cast<int>(h.closed_.size());
    if (h.mu_ < 3) fail(Error::Code::TooFewVertices, "cycle hypergraph needs at least 3 vertices");
    h.shape_ = Shape::Cycle;
    h.order_.resize(h.mu_);
    std::iota(h.order_.begin(), h.order_.end(), 1);
    h.deriveFacesFromPattern();
    return h;
}

Hypergraph Hypergraph::fromFaces(int mu, std::vector<Face> faces) {
    if (mu < 1) fail(Error::Code::TooFewVertices, "hypergraph needs at least 1 vertex");
    if (mu > 31) fail(Error::Code::TooManyVariables, "vertex count limited to 31");
    Hypergraph h;
    h.mu_ = mu;
    Face full = mu == 31 ? 0x7fffffffu : (Face(1) << mu) - 1;
    Face covered = 0;
    for (Face f : faces) {
        if (f == 0) fail(Error::Code::MalformedInput, "empty face");
        if (f & ~full) fail(Error::Code::MalformedInput, "face mentions a vertex beyond mu");
        covered |= f;
    }
    if (covered != full) fail(Error::Code::MalformedInput, "every vertex must lie in at least one face");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    h.faces_ = std::move(faces);
    h.deriveStatusFromFaces();
    h.classifyShape();
    return h;
}

std::string Hypergraph::pattern() const {
    if (shape_ == Shape::General) fail(Error::Code::UnsupportedShape, "general hypergraph has no pattern");
    std::string s;
    s.reserve(mu_);
    for (int p = 0; p < mu_; ++p) s += closed_[order_[p] - 1] ? 'c' : 'o';
    return s;
}

std::string Hypergraph::encode() const {
    if (shape_ == Shape::String) return "string:" + pattern();
    if (shape_ == Shape::Cycle) return "cycle:" + pattern();
    std::ostringstream os;
    os << "faces:";
    bool firstFace = true;
    for (Face f : faces_) {
        if (!firstFace) os << ";";
        firstFace = false;
        os << "{";
        bool firstVertex = true;
        for (int v = 1; v <= mu_; ++v) {
            if (f & (Face(1) << (v - 1))) {
                if (!firstVertex) os << ",";
                firstVertex = false;
                os << v;
            }
        }
        os << "}";
    }
    return os.str();
}

bool Hypergraph::sameFaces(const Hypergraph& other) const {
    return mu_ == other.mu_ && faces_ == other.faces_;
}

int Hypergraph::positionOf(int v) const {
    for (int p = 0; p < mu_; ++p) {
        if (order_[p] == v) return p + 1;
    }
    fail(Error::Code::OutOfRange, "vertex not present");
}

Hypergraph parseHypergraph(const std::string& text) {
    auto finish = [](Hypergraph h) {
        if (!validateSeparated(h)) fail(Error::Code::NotSeparated, "hypergraph is not separated: " + h.encode());
        return h;
    };
    if (text.rfind("string:", 0) == 0) {
        return finish(Hypergraph::stringFromPattern(text.substr(7)));
    }
    if (text.rfind("cycle:", 0) == 0) {
        return finish(Hypergraph::cycleFromPattern(text.substr(6)));
    }
    if (text.rfind("faces:", 0) == 0) {
        std::string body = text.substr(6);
        std::vector<Face> faces;
        int mu = 0;
        size_t i = 0;
        while (i < body.size()) {
            if (body[i] != '{') fail(Error::Code::MalformedInput, "expected '{' in face list");
            size_t close = body.find('}', i);
            if (close == std::string::npos) fail(Error::Code::MalformedInput, "unterminated face");
            std::string inner = body.substr(i + 1, close - i - 1);
            Face f = 0;
            std::istringstream is(inner);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                size_t pos = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &pos);
                } catch (...) {
                    fail(Error::Code::MalformedInput, "bad vertex '" + tok + "'");
                }
                if (pos != tok.size() || v < 1 || v > 31)
                    fail(Error::Code::MalformedInput, "bad vertex '" + tok + "'");
                f |= Face(1) << (v - 1);
                mu = std::max(mu, v);
            }
            if (f == 0) fail(Error::Code::MalformedInput, "empty face");
            faces.push_back(f);
            i = close + 1;
            if (i < body.size()) {
                if (body[i] != ';') fail(Error::Code::MalformedInput, "expected ';' between faces");
                ++i;
            }
        }
        if (faces.empty()) fail(Error::Code::MalformedInput, "no faces given");
        return finish(Hypergraph::fromFaces(mu, std::move(faces)));
    }
    fail(Error::Code::MalformedInput, "expected string:, cycle: or faces: prefix");
}

bool validateSeparated(const Hypergraph& h) {
    const auto& faces = h.faces();
    for (int i = 1; i <= h.mu(); ++i) {
        for (int j = 1; j <= h.mu(); ++j) {
            if (i == j) continue;
            Face bi = Face(1) << (i - 1), bj = Face(1) << (j - 1);
            bool found = false;
            for (Face f : faces) {
                if ((f & bi) && !(f & bj)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

Hypergraph tail(const Hypergraph& h, int k) {
    if (h.shape() == Shape::General)
        fail(Error::Code::UnsupportedShape, "tail requires a string or cycle hypergraph");
    if (!h.orderIsIdentity()) fail(Error::Code::Internal, "tail requires structural labels");
    if (k < 1 || k > h.mu() - 2)
        fail(Error::Code::OutOfRange, "tail index must satisfy 1 <= k <= mu-2");
    int m = h.mu() - k;
    std::string pat(m, 'o');
    pat[0] = 'c';
    for (int i = 2; i <= m; ++i) pat[i - 1] = h.closed(k + i) ? 'c' : 'o';
    if (h.shape() == Shape::Cycle) pat[m - 1] = 'c';
    return Hypergraph::stringFromPattern(pat);
}

Hypergraph closeVertex(const Hypergraph& h, int v) {
    if (v < 1 || v > h.mu()) fail(Error::Code::OutOfRange, "vertex out of range");
    if (h.closed(v)) fail(Error::Code::AlreadyClosed, "vertex already closed");
    // adding a singleton face never disturbs the pair structure, so the
    // shape survives reclassification and vertex ids stay put
    std::vector<Face> faces = h.faces();
    faces.push_back(Face(1) << (v - 1));
    return Hypergraph::fromFaces(h.mu(), std::move(faces));
}

std::pair<Hypergraph, MergeRecord> deleteRunAndMerge(const Hypergraph& h, int runStart) {
    if (h.shape() != Shape::Cycle)
        fail(Error::Code::UnsupportedShape, "deleteRunAndMerge requires a cycle hypergraph");
    if (!h.orderIsIdentity()) fail(Error::Code::Internal, "deleteRunAndMerge requires structural labels");
    int mu = h.mu();
    if (runStart < 1 || runStart > mu) fail(Error::Code::OutOfRange, "run start out of range");
    int p = runStart;
    int q = wrap1(p + 1, mu);
    int left = wrap1(p - 1, mu);
    int right = wrap1(p + 2, mu);
    if (!h.open(p) || !h.open(q)) fail(Error::Code::InvalidRun, "run vertices must be open");
    if (left == right) fail(Error::Code::CoincidingEndpoints, "run endpoints coincide");
    if (!h.closed(left) || !h.closed(right)) fail(Error::Code::InvalidRun, "run endpoints must be closed");
    if (mu - 3 < 3) fail(Error::Code::InvalidRun, "merged hypergraph would not be a cycle");

    std::string pat(mu - 3, 'c');
    for (int i = 2; i <= mu - 3; ++i) pat[i - 1] = h.closed(wrap1(p + 1 + i, mu)) ? 'c' : 'o';
    MergeRecord rec;
    rec.mergedVertex = 1;
    rec.sources = {std::min(left, right), std::max(left, right)};
    return {Hypergraph::cycleFromPattern(pat), rec};
}

std::vector<OpenRun> openRuns(const Hypergraph& h) {
    if (h.shape() == Shape::General)
        fail(Error::Code::UnsupportedShape, "open runs are defined for strings and cycles");
    std::string pat = h.pattern();
    int mu = h.mu();
    std::vector<OpenRun> runs;
    if (h.shape() == Shape::String) {
        int i = 0;
        while (i < mu) {
            if (pat[i] == 'o') {
                int j = i;
                while (j < mu && pat[j] == 'o') ++j;
                OpenRun r;
                r.start = i + 1;
                r.length = j - i;
                r.leftClosed = i > 0 ? i : 0;
                r.rightClosed = j < mu ? j + 1 : 0;
                runs.push_back(r);
                i = j;
            } else {
                ++i;
            }
        }
        return runs;
    }
    // cycle: wrap-aware scan starting after the first closed position
    int firstClosed = -1;
    for (int i = 0; i < mu; ++i) {
        if (pat[i] == 'c') {
            firstClosed = i;
            break;
        }
    }
    if (firstClosed < 0) {
        runs.push_back(OpenRun{1, mu, 0, 0});
        return runs;
    }
    int i = firstClosed;
    int steps = 0;
    while (steps < mu) {
        int next = (i + 1) % mu;
        if (pat[next] == 'o') {
            int len = 0;
            int j = next;
            while (pat[j] == 'o') {
                ++len;
                j = (j + 1) % mu;
            }
            OpenRun r;
            r.start = next + 1;
            r.length = len;
            r.leftClosed = i + 1;
            r.rightClosed = j + 1;
            runs.push_back(r);
            steps += len + 1;
            i = j;
        } else {
            steps += 1;
            i = next;
        }
    }
    return runs;
}

} // namespace strcyc
