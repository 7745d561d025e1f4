#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "q5/poly.hpp"
#include "q5/variables.hpp"

namespace q5 {

using Multidegree = std::array<int, kSlots>;

/// A covariant of the ground form: a polynomial in the binary variables whose
/// coefficients are either scalars (numeric mode) or polynomials in the
/// amplitude variables (symbolic mode, S = Rational with A_{...} variables in
/// the monomials).
template <Scalar S>
struct Covariant {
    Poly<S> body;
    int a_degree = 0;
    Multidegree multidegree{};

    bool is_zero() const { return body.is_zero(); }
    bool is_invariant() const { return multidegree == Multidegree{}; }
};

/// Exponents (eps_1 .. eps_5) of a transvectant (P,Q)^{eps}.
struct TransvectionSignature {
    std::array<int, kSlots> eps{};

    /// Parses the five-digit form used in the literature, e.g. "00101".
    static TransvectionSignature parse(std::string_view digits);
    /// eps = 1 on every slot but `slot`.
    static TransvectionSignature all_but(int slot);
};

class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Invariant { Dx, Dy, Dz, Dt, Du, F };

inline constexpr std::array<Invariant, 6> kAllInvariants = {Invariant::Dx, Invariant::Dy, Invariant::Dz,
                                                            Invariant::Dt, Invariant::Du, Invariant::F};

std::string invariant_name(Invariant inv);
/// Accepts "Dx" .. "Du", "F"; throws InputError otherwise.
Invariant parse_invariant(std::string_view name);

/// f = sum_i c_i x_{i1} y_{i2} z_{i3} t_{i4} u_{i5} with i1 the most significant bit.
template <Scalar S>
Covariant<S> ground_form(std::span<const S, kAmplitudes> coefficients) {
    Covariant<S> f;
    f.a_degree = 1;
    f.multidegree = {1, 1, 1, 1, 1};
    for (int index = 0; index < kAmplitudes; ++index) {
        Monomial m;
        for (int slot = 0; slot < kSlots; ++slot) m = m.times(var::binary(slot, (index >> (4 - slot)) & 1), 1);
        f.body.add_term(m, coefficients[index]);
    }
    return f;
}

/// Ground form with the 32 amplitudes kept as variables.
Covariant<Rational> symbolic_ground_form();

namespace detail {

template <Scalar S>
Poly<S> differentiate(Poly<S> p, const std::array<int, kSlots>& order0, const std::array<int, kSlots>& order1) {
    for (int s = 0; s < kSlots && !p.is_zero(); ++s) {
        p = p.partial(var::binary(s, 0), order0[s]);
        p = p.partial(var::binary(s, 1), order1[s]);
    }
    return p;
}

}  // namespace detail

/// Transvectant (P,Q)^{eps}. The Omega operator of a slot is
/// d/ds'_0 d/ds''_1 - d/ds'_1 d/ds''_0; its eps-th power expands binomially,
/// so after identifying s', s'' with s the result is
///
///   sum_k prod_s C(eps_s,k_s) (-1)^{k_s}
///         (d_{s0}^{eps_s-k_s} d_{s1}^{k_s} P) (d_{s0}^{k_s} d_{s1}^{eps_s-k_s} Q).
///
/// No normalization factor is applied.
template <Scalar S>
Covariant<S> transvect(const Covariant<S>& p, const Covariant<S>& q, const TransvectionSignature& sig) {
    Covariant<S> r;
    r.a_degree = p.a_degree + q.a_degree;
    bool vanishes = false;
    for (int s = 0; s < kSlots; ++s) {
        r.multidegree[s] = p.multidegree[s] + q.multidegree[s] - 2 * sig.eps[s];
        if (r.multidegree[s] < 0 || sig.eps[s] > p.multidegree[s] || sig.eps[s] > q.multidegree[s]) vanishes = true;
    }
    if (vanishes) {
        for (auto& m : r.multidegree) m = std::max(m, 0);
        return r;
    }

    std::array<int, kSlots> k{};
    for (;;) {
        Integer coef = 1;
        std::array<int, kSlots> p0{}, p1{}, q0{}, q1{};
        for (int s = 0; s < kSlots; ++s) {
            coef *= binomial(sig.eps[s], k[s]);
            if (k[s] % 2) coef = -coef;
            p0[s] = sig.eps[s] - k[s];
            p1[s] = k[s];
            q0[s] = k[s];
            q1[s] = sig.eps[s] - k[s];
        }
        Poly<S> dp = detail::differentiate(p.body, p0, p1);
        if (!dp.is_zero()) {
            Poly<S> dq = detail::differentiate(q.body, q0, q1);
            if (!dq.is_zero()) r.body += (dp * dq) * coef.get_si();
        }
        int s = 0;
        while (s < kSlots && k[s] == sig.eps[s]) k[s++] = 0;
        if (s == kSlots) break;
        ++k[s];
    }
    return r;
}

/// b_s = (f,f)^{eps} with eps_s = 0 and 1 elsewhere: the quadratic binary
/// form in slot s obtained from the hyperdeterminant of the residual
/// quadrilinear form.
template <Scalar S>
Covariant<S> slot_quadratic(const Covariant<S>& f, int slot) {
    return transvect(f, f, TransvectionSignature::all_but(slot));
}

/// c1^2 - 4 c2 c0 for b = c2 s0^2 + c1 s0 s1 + c0 s1^2. The coefficients
/// may themselves be amplitude polynomials.
template <Scalar S>
Poly<S> discriminant(const Covariant<S>& b) {
    int slot = -1;
    for (int s = 0; s < kSlots; ++s) {
        if (b.multidegree[s] == 2 && slot == -1) slot = s;
        else if (b.multidegree[s] != 0) slot = -2;
    }
    if (slot < 0) throw ShapeError("discriminant needs a quadratic form in exactly one slot");
    const Var s0 = var::binary(slot, 0);
    const Var s1 = var::binary(slot, 1);
    Poly<S> c[3];
    for (const auto& [m, coef] : b.body.terms()) {
        int e0 = m.exponent(s0);
        int e1 = m.exponent(s1);
        Monomial rest = m.without(s0).without(s1);
        if (e0 + e1 != 2 || e0 < 0 || e1 < 0 || rest.has_negative_exponent())
            throw ShapeError("form is not quadratic in slot " + std::string(1, slot_letter(slot)));
        for (const auto& fac : rest.factors())
            if (!var::is_amplitude(fac.var)) throw ShapeError("form mentions variables outside its slot");
        c[e0].add_term(rest, coef);
    }
    return c[1] * c[1] - (c[2] * c[0]) * 4L;
}

template <Scalar S>
Poly<S> invariant_D(const Covariant<S>& f, int slot) {
    return discriminant(slot_quadratic(f, slot));
}

template <Scalar S>
struct CovariantChain {
    Covariant<S> b22020;
    Covariant<S> c31111;
    Covariant<S> d22200;
    Covariant<S> e11111;
};

/// B = (f,f)^{00101}, C = (B,f)^{01010}, D = (C,f)^{10011}, E = (D,f)^{11100}.
template <Scalar S>
CovariantChain<S> covariant_chain(const Covariant<S>& f) {
    CovariantChain<S> chain;
    chain.b22020 = transvect(f, f, TransvectionSignature::parse("00101"));
    chain.c31111 = transvect(chain.b22020, f, TransvectionSignature::parse("01010"));
    chain.d22200 = transvect(chain.c31111, f, TransvectionSignature::parse("10011"));
    chain.e11111 = transvect(chain.d22200, f, TransvectionSignature::parse("11100"));
    return chain;
}

/// The degree-6 invariant F = (E_{11111}, f)^{11111}.
template <Scalar S>
Covariant<S> invariant_F_covariant(const Covariant<S>& f, const CovariantChain<S>& chain) {
    return transvect(chain.e11111, f, TransvectionSignature::parse("11111"));
}

template <Scalar S>
Poly<S> invariant_F(const Covariant<S>& f) {
    return invariant_F_covariant(f, covariant_chain(f)).body;
}

template <Scalar S>
Poly<S> evaluate_invariant(const Covariant<S>& f, Invariant inv) {
    if (inv == Invariant::F) return invariant_F(f);
    return invariant_D(f, static_cast<int>(inv));
}

}  // namespace q5
