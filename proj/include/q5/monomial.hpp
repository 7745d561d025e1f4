#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <ostream>
#include <span>
#include <utility>

#include "q5/variables.hpp"

namespace q5 {

/// Power product of engine variables, stored as (variable, exponent) pairs
/// sorted by variable with no zero exponents. Negative exponents are allowed
/// (Laurent monomials); modules that need polynomial monomials check for it.
class Monomial {
public:
    struct Factor {
        Var var;
        int exp;
        friend auto operator<=>(const Factor&, const Factor&) = default;
    };
    using Storage = boost::container::small_vector<Factor, 6>;

    Monomial() = default;

    static Monomial of(Var v, int exp = 1) {
        Monomial m;
        if (exp != 0) m.factors_.push_back({v, exp});
        return m;
    }

    std::span<const Factor> factors() const { return {factors_.data(), factors_.size()}; }
    bool is_one() const { return factors_.empty(); }

    int exponent(Var v) const {
        for (const auto& f : factors_) {
            if (f.var == v) return f.exp;
            if (f.var > v) break;
        }
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& f : factors_) d += f.exp;
        return d;
    }

    bool has_negative_exponent() const {
        for (const auto& f : factors_)
            if (f.exp < 0) return true;
        return false;
    }

    /// Product of this monomial with v^exp.
    Monomial times(Var v, int exp) const {
        Monomial r;
        r.factors_.reserve(factors_.size() + 1);
        bool placed = exp == 0;
        for (const auto& f : factors_) {
            if (!placed && v < f.var) {
                r.factors_.push_back({v, exp});
                placed = true;
            }
            if (f.var == v) {
                placed = true;
                if (f.exp + exp != 0) r.factors_.push_back({v, f.exp + exp});
                continue;
            }
            r.factors_.push_back(f);
        }
        if (!placed) r.factors_.push_back({v, exp});
        return r;
    }

    Monomial without(Var v) const {
        Monomial r;
        for (const auto& f : factors_)
            if (f.var != v) r.factors_.push_back(f);
        return r;
    }

    Monomial inverse() const {
        Monomial r = *this;
        for (auto& f : r.factors_) f.exp = -f.exp;
        return r;
    }

    Monomial pow(int k) const {
        if (k == 0) return {};
        Monomial r = *this;
        for (auto& f : r.factors_) f.exp *= k;
        return r;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->var < j->var) {
                r.factors_.push_back(*i++);
            } else if (j->var < i->var) {
                r.factors_.push_back(*j++);
            } else {
                int e = i->exp + j->exp;
                if (e != 0) r.factors_.push_back({i->var, e});
                ++i;
                ++j;
            }
        }
        r.factors_.insert(r.factors_.end(), i, a.factors_.end());
        r.factors_.insert(r.factors_.end(), j, b.factors_.end());
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                            b.factors_.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m) {
        if (m.is_one()) return os << "1";
        bool first = true;
        for (const auto& f : m.factors_) {
            if (!first) os << "*";
            first = false;
            os << var::name(f.var);
            if (f.exp != 1) os << "^" << f.exp;
        }
        return os;
    }

private:
    Storage factors_;
};

}  // namespace q5
