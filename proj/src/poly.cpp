#include "strcyc/poly.hpp"

#include <algorithm>
#include <cassert>

namespace strcyc {

int expoDegree(const Expo& a) {
    int d = 0;
    for (uint16_t e : a) d += e;
    return d;
}

bool expoDivides(const Expo& a, const Expo& b) {
    assert(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Expo expoMul(const Expo& a, const Expo& b) {
    assert(a.size() == b.size());
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<uint16_t>(a[i] + b[i]);
    return r;
}

Expo expoQuot(const Expo& b, const Expo& a) {
    assert(a.size() == b.size());
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        assert(b[i] >= a[i]);
        r[i] = static_cast<uint16_t>(b[i] - a[i]);
    }
    return r;
}

Expo expoLcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool expoCoprime(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] && b[i]) return false;
    }
    return true;
}

bool MonomialOrder::less(const Expo& a, const Expo& b) const {
    if (kind == OrderKind::Lex) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
    int da = expoDegree(a), db = expoDegree(b);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

Polynomial::Polynomial(std::vector<PolyTerm> terms, const MonomialOrder& order) {
    std::sort(terms.begin(), terms.end(),
              [&](const PolyTerm& x, const PolyTerm& y) { return order.less(y.mono, x.mono); });
    for (auto& t : terms) {
        if (t.coeff.isZero()) continue;
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.isZero()) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

Polynomial Polynomial::constant(long long c, int nvars) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({Expo(nvars, 0), BigInt(c)});
    return p;
}

Polynomial Polynomial::monomial(const Expo& e, long long c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({e, BigInt(c)});
    return p;
}

bool Polynomial::isConstant() const {
    return terms_.size() == 1 && expoDegree(terms_[0].mono) == 0;
}

Polynomial Polynomial::add(const Polynomial& o, const MonomialOrder& order) const {
    Polynomial r;
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && order.less(o.terms_[j].mono, terms_[i].mono))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || order.less(terms_[i].mono, o.terms_[j].mono)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            BigInt c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.isZero()) r.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::sub(const Polynomial& o, const MonomialOrder& order) const {
    return add(o.mulScalar(BigInt(-1)), order);
}

Polynomial Polynomial::mulTerm(const BigInt& c, const Expo& e, const MonomialOrder& order) const {
    (void)order; // multiplying by a fixed term preserves the term order
    Polynomial r;
    if (c.isZero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({expoMul(t.mono, e), t.coeff * c});
    return r;
}

Polynomial Polynomial::mulScalar(const BigInt& c) const {
    Polynomial r;
    if (c.isZero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

void Polynomial::normalize() {
    if (terms_.empty()) return;
    BigInt g(0);
    for (const auto& t : terms_) g = BigInt::gcd(g, t.coeff);
    if (terms_.front().coeff.sign() < 0) g = -g;
    if (g.isOne()) return;
    for (auto& t : terms_) t.coeff = t.coeff.divExact(g);
}

std::string Polynomial::text(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        BigInt c = t.coeff;
        if (k == 0) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        BigInt a = c.abs();
        std::string monoText;
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!monoText.empty()) monoText += "*";
            monoText += vars[i];
            if (t.mono[i] > 1) monoText += "^" + std::to_string(t.mono[i]);
        }
        if (monoText.empty()) {
            s += a.toString();
        } else {
            if (!a.isOne()) s += a.toString() + "*";
            s += monoText;
        }
    }
    return s;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

} // namespace strcyc
