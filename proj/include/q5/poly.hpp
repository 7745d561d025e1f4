#pragma once

#include <concepts>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "q5/monomial.hpp"
#include "q5/rational.hpp"

namespace q5 {

namespace detail {
template <class S>
bool scalar_is_zero(const S& c) {
    return is_zero(c);
}
}  // namespace detail

/// Arithmetic contract shared by every coefficient domain: ring operations,
/// scaling by a machine integer, and an exact zero test.
template <class S>
concept Scalar = std::copyable<S> && requires(S a, const S& b, long k) {
    S(k);
    a += b;
    a -= b;
    a *= b;
    a *= k;
    { is_zero(b) } -> std::convertible_to<bool>;
};

/// Sparse polynomial with coefficients in S over the engine variable
/// registry. Terms are kept in a std::map so iteration order is canonical and
/// zero coefficients are never stored.
template <Scalar S>
class Poly {
public:
    using Terms = std::map<Monomial, S>;

    Poly() = default;
    explicit Poly(const S& c) {
        if (!detail::scalar_is_zero(c)) terms_.emplace(Monomial{}, c);
    }

    static Poly term(Monomial m, S c) {
        Poly p;
        if (!detail::scalar_is_zero(c)) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }
    static Poly variable(Var v) { return term(Monomial::of(v), S(1L)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of the monomial 1.
    S constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? S(0L) : it->second;
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    S coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? S(0L) : it->second;
    }

    void add_term(const Monomial& m, const S& c) {
        if (detail::scalar_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (detail::scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) {
            S neg = c;
            neg *= -1L;
            add_term(m, neg);
        }
        return *this;
    }
    Poly& operator*=(const S& c) {
        if (detail::scalar_is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        drop_zeros();
        return *this;
    }
    Poly& operator*=(long k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= k;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= -1L; }
    friend Poly operator*(Poly a, const S& c) { return a *= c; }
    friend Poly operator*(Poly a, long k) { return a *= k; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                S c = ca;
                c *= cb;
                Monomial m = ma * mb;
                auto [it, inserted] = r.terms_.try_emplace(std::move(m), c);
                if (!inserted) it->second += c;
            }
        }
        r.drop_zeros();
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Formal partial derivative; 0 when v does not occur.
    Poly partial(Var v) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (e == 0) continue;
            S d = c;
            d *= static_cast<long>(e);
            r.add_term(m.times(v, -1), d);
        }
        return r;
    }

    Poly partial(Var v, int order) const {
        Poly r = *this;
        for (int i = 0; i < order && !r.is_zero(); ++i) r = r.partial(v);
        return r;
    }

    /// Substitutes the assigned variables by scalar values; unassigned
    /// variables stay symbolic. Negative powers of assigned variables are
    /// rejected.
    Poly evaluate(const std::map<Var, S>& assignment) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Monomial rest;
            S coef = c;
            for (const auto& f : m.factors()) {
                auto it = assignment.find(f.var);
                if (it == assignment.end()) {
                    rest = rest.times(f.var, f.exp);
                    continue;
                }
                if (f.exp < 0) throw DomainError("cannot evaluate a negative power at a scalar");
                for (int i = 0; i < f.exp; ++i) coef *= it->second;
            }
            r.add_term(rest, coef);
        }
        return r;
    }

    /// Degree of every term in the variables selected by pred; -1 for the zero
    /// polynomial or when terms disagree.
    template <class Pred>
    int homogeneous_degree(Pred pred) const {
        int deg = -1;
        for (const auto& [m, c] : terms_) {
            int d = 0;
            for (const auto& f : m.factors())
                if (pred(f.var)) d += f.exp;
            if (deg == -1) deg = d;
            else if (deg != d) return -1;
        }
        return deg;
    }

    template <class Pred>
    bool mentions(Pred pred) const {
        for (const auto& [m, c] : terms_)
            for (const auto& f : m.factors())
                if (pred(f.var)) return true;
        return false;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [m, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (!m.is_one()) os << "*" << m;
        }
        return os;
    }

private:
    void drop_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (detail::scalar_is_zero(it->second)) it = terms_.erase(it);
            else ++it;
        }
    }

    Terms terms_;
};

template <Scalar S>
bool is_zero(const Poly<S>& p) {
    return p.is_zero();
}

using RationalPoly = Poly<Rational>;

}  // namespace q5
