#pragma once

#include <string>
#include <utility>
#include <vector>

#include "q5/rational.hpp"

namespace q5 {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(Rational c);
    static UPoly monomial(int degree, Rational c = 1);
    /// 1 - c t^e.
    static UPoly one_minus(const Rational& c, int e);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational at(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const Rational& k) const;
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Quotient and remainder; throws std::domain_error on division by zero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    /// Monic gcd (zero if both are zero).
    static UPoly gcd(UPoly a, UPoly b);

    UPoly pow(int k) const;
    std::string str(char var = 't') const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Taylor coefficients of num/den at 0 through degree n; den(0) must be
/// nonzero.
std::vector<Rational> taylor_coefficients(const UPoly& num, const UPoly& den, int n);

}  // namespace q5
