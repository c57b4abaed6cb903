#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strcyc/bigint.hpp"
#include "strcyc/errors.hpp"

namespace strcyc {

// Exponent vector over a fixed ambient variable list.
using Expo = std::vector<uint16_t>;

int expoDegree(const Expo& a);
bool expoDivides(const Expo& a, const Expo& b); // a | b
Expo expoMul(const Expo& a, const Expo& b);
Expo expoQuot(const Expo& b, const Expo& a);    // b / a, requires a | b
Expo expoLcm(const Expo& a, const Expo& b);
bool expoCoprime(const Expo& a, const Expo& b);

enum class OrderKind { DegRevLex, Lex };

struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    bool less(const Expo& a, const Expo& b) const;
    bool equal(const Expo& a, const Expo& b) const { return a == b; }
};

struct PolyTerm {
    Expo mono;
    BigInt coeff;
};

// Sparse exact polynomial; terms sorted strictly descending under the order
// fixed at construction time and carried by the owner. Coefficients are kept
// as a primitive integer vector (content 1, positive leading coefficient);
// this is the rational normal form up to a positive unit.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<PolyTerm> terms, const MonomialOrder& order);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(long long c, int nvars);
    static Polynomial monomial(const Expo& e, long long c = 1);

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    const std::vector<PolyTerm>& terms() const { return terms_; }
    const Expo& leadMono() const { return terms_.front().mono; }
    const BigInt& leadCoeff() const { return terms_.front().coeff; }
    size_t termCount() const { return terms_.size(); }

    Polynomial add(const Polynomial& o, const MonomialOrder& order) const;
    Polynomial sub(const Polynomial& o, const MonomialOrder& order) const;
    Polynomial mulTerm(const BigInt& c, const Expo& e, const MonomialOrder& order) const;
    Polynomial mulScalar(const BigInt& c) const;

    // Divides out the coefficient content and makes the leading coefficient
    // positive.
    void normalize();

    std::string text(const std::vector<std::string>& vars) const;

    bool operator==(const Polynomial& o) const;

private:
    std::vector<PolyTerm> terms_;
};

} // namespace strcyc
