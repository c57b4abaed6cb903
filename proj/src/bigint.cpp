#include "strcyc/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace strcyc {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (u) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

BigInt BigInt::fromString(const std::string& s) {
    BigInt r;
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sg = -1;
        ++i;
    }
    assert(i < s.size());
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        assert(s[i] >= '0' && s[i] <= '9');
        r = r * ten + BigInt(s[i] - '0');
    }
    if (sg < 0) r = -r;
    return r;
}

void BigInt::trim(std::vector<uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

int BigInt::cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::cmp(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int m = cmpMag(mag_, o.mag_);
    return sign_ >= 0 ? m : -m;
}

std::vector<uint32_t> BigInt::addMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::subMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    assert(borrow == 0);
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::mulMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(r);
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.mag_ = addMag(mag_, o.mag_);
        r.sign_ = sign_;
    } else {
        int c = cmpMag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = subMag(mag_, o.mag_);
            r.sign_ = sign_;
        } else {
            r.mag_ = subMag(o.mag_, mag_);
            r.sign_ = o.sign_;
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.mag_ = mulMag(mag_, o.mag_);
    r.sign_ = sign_ * o.sign_;
    return r;
}

void BigInt::shiftLeftBit() {
    uint32_t carry = 0;
    for (auto& limb : mag_) {
        uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) mag_.push_back(carry);
    if (!mag_.empty() && sign_ == 0) sign_ = 1;
}

void BigInt::setBit0(uint32_t b) {
    if (b == 0) return;
    if (mag_.empty()) mag_.push_back(0);
    mag_[0] |= 1u;
    sign_ = 1;
}

void BigInt::divMod(const BigInt& a, const BigInt& o, BigInt& q, BigInt& r) {
    if (o.isZero()) throw std::domain_error("BigInt division by zero");
    std::vector<uint32_t> amag = a.mag_;
    BigInt omag = o.abs();
    // binary long division on magnitudes
    BigInt quot, rem;
    for (size_t li = amag.size(); li-- > 0;) {
        for (int bit = 31; bit >= 0; --bit) {
            rem.shiftLeftBit();
            rem.setBit0((amag[li] >> bit) & 1u);
            quot.shiftLeftBit();
            if (cmpMag(rem.mag_, omag.mag_) >= 0) {
                rem.mag_ = subMag(rem.mag_, omag.mag_);
                trim(rem.mag_);
                if (rem.mag_.empty()) rem.sign_ = 0;
                quot.setBit0(1);
            }
        }
    }
    trim(quot.mag_);
    quot.sign_ = quot.mag_.empty() ? 0 : 1;
    trim(rem.mag_);
    rem.sign_ = rem.mag_.empty() ? 0 : 1;
    // truncation toward zero: sign of q is sign(a)*sign(o), remainder keeps sign(a)
    if (a.sign_ * o.sign_ < 0) quot.sign_ = -quot.sign_;
    if (a.sign_ < 0) rem.sign_ = -rem.sign_;
    q = quot;
    r = rem;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divMod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divMod(*this, o, q, r);
    return r;
}

BigInt BigInt::divExact(const BigInt& o) const {
    BigInt q, r;
    divMod(*this, o, q, r);
    // exactness is load-bearing for the fraction-free eliminations
    if (!r.isZero()) throw std::domain_error("BigInt::divExact with nonzero remainder");
    return q;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.isZero()) {
        BigInt q, r;
        divMod(x, y, q, r);
        x = y;
        y = r.abs();
    }
    return x;
}

bool BigInt::fitsLongLong(long long& out) const {
    if (mag_.size() > 2) return false;
    unsigned long long u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<unsigned long long>(mag_[1]) << 32;
    if (sign_ >= 0) {
        if (u > 0x7fffffffffffffffULL) return false;
        out = static_cast<long long>(u);
    } else {
        if (u > 0x8000000000000000ULL) return false;
        out = -static_cast<long long>(u - 1) - 1;
    }
    return true;
}

std::string BigInt::toString() const {
    if (isZero()) return "0";
    BigInt v = abs();
    BigInt base(1000000000);
    std::vector<uint32_t> chunks;
    while (!v.isZero()) {
        BigInt q, r;
        divMod(v, base, q, r);
        long long c = 0;
        r.fitsLongLong(c);
        chunks.push_back(static_cast<uint32_t>(c));
        v = q;
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

} // namespace strcyc
