#pragma once

#include <array>
#include <ostream>

#include "q5/rational.hpp"
#include "q5/variables.hpp"

namespace q5 {

/// First-order jet over the rationals in the 32 amplitude directions:
/// a value together with its exact gradient. Propagating jets through the
/// transvection pipeline yields exact Jacobians at a rational point.
class Jet {
public:
    using Gradient = std::array<Rational, kAmplitudes>;

    Jet() = default;
    Jet(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Jet(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    /// The coordinate function A_index taking the given value.
    static Jet coordinate(int index, Rational value) {
        Jet j(std::move(value));
        j.partials_[index] = 1;
        return j;
    }

    const Rational& value() const { return value_; }
    const Gradient& partials() const { return partials_; }
    const Rational& partial(int index) const { return partials_[index]; }

    Jet& operator+=(const Jet& o) {
        value_ += o.value_;
        for (int i = 0; i < kAmplitudes; ++i) partials_[i] += o.partials_[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        value_ -= o.value_;
        for (int i = 0; i < kAmplitudes; ++i) partials_[i] -= o.partials_[i];
        return *this;
    }
    Jet& operator*=(const Jet& o) {
        for (int i = 0; i < kAmplitudes; ++i) partials_[i] = partials_[i] * o.value_ + value_ * o.partials_[i];
        value_ *= o.value_;
        return *this;
    }
    Jet& operator*=(long k) {
        value_ *= k;
        for (auto& p : partials_) p *= k;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }

    friend bool operator==(const Jet&, const Jet&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Jet& j) { return os << "jet(" << j.value_ << ")"; }

private:
    Rational value_{0};
    Gradient partials_{};
};

inline bool is_zero(const Jet& j) {
    if (!is_zero(j.value())) return false;
    for (const auto& p : j.partials())
        if (!is_zero(p)) return false;
    return true;
}

}  // namespace q5
