#pragma once

#include <ostream>
#include <string>

#include "q5/rational.hpp"

namespace q5 {

/// Exact value a + b*sqrt(n) with n square-free.
///
/// A value whose surd part is zero is stored with radicand 1, so it combines
/// with any other QuadExt. Two values with nonzero surd parts must share the
/// radicand; mixing sqrt(2) and sqrt(3) raises DomainError.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational v) : rat_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational rat, Rational surd, long radicand);

    static QuadExt sqrt(long radicand) { return {Rational(0), Rational(1), radicand}; }

    const Rational& rat_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    long radicand() const { return radicand_; }
    bool is_rational() const { return radicand_ == 1; }

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator*=(long k);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator*(QuadExt a, long k) { return a *= k; }
    friend QuadExt operator-(QuadExt a) {
        a.rat_ = -a.rat_;
        a.surd_ = -a.surd_;
        return a;
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.radicand_ == b.radicand_ && a.rat_ == b.rat_ && a.surd_ == b.surd_;
    }

    /// "p/q" or "p/q + r/s*sqrt(n)".
    std::string str() const;

private:
    void normalize();
    long common_radicand(const QuadExt& o) const;

    Rational rat_{0};
    Rational surd_{0};
    long radicand_ = 1;
};

inline bool is_zero(const QuadExt& v) { return is_zero(v.rat_part()) && is_zero(v.surd_part()); }

inline std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.str(); }

}  // namespace q5
