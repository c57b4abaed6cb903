#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strcyc {

// Arbitrary-precision signed integer, sign-magnitude over base 2^32 limbs.
// Covers what the Groebner engine and the homology rank computations need:
// ring arithmetic, comparisons, gcd and exact division. Division is binary
// long division; at the coefficient sizes arising here that is never hot.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt fromString(const std::string& s);

    bool isZero() const { return mag_.empty(); }
    bool isOne() const { return sign_ > 0 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Quotient and remainder with truncation toward zero; |r| < |o|.
    static void divMod(const BigInt& a, const BigInt& o, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    // Division known to be exact; checked and aborts on nonzero remainder.
    BigInt divExact(const BigInt& o) const;

    static BigInt gcd(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    // Returns the value if it fits in long long, otherwise nullptr semantics
    // via the bool flag.
    bool fitsLongLong(long long& out) const;

    std::string toString() const;

    size_t limbCount() const { return mag_.size(); }

private:
    int cmp(const BigInt& o) const;
    static int cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> addMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> subMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mulMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void trim(std::vector<uint32_t>& m);
    void shiftLeftBit();
    void setBit0(uint32_t b);

    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> mag_;    // little-endian limbs, no leading zeros
};

} // namespace strcyc
