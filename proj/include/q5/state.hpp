#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "q5/quad_ext.hpp"
#include "q5/transvection.hpp"

namespace q5 {

/// Unnormalized 5-qubit state: 32 amplitudes A_{i1..i5}, index = binary value
/// of i1..i5 with i1 most significant. All nonrational amplitudes share one
/// radicand.
class PureState5 {
public:
    using Amplitudes = std::array<QuadExt, kAmplitudes>;

    PureState5() = default;
    explicit PureState5(Amplitudes amplitudes);

    /// Parses a five-character 0/1 string into an amplitude index.
    static int index_of(std::string_view bits);
    static std::string bits_of(int index);

    const QuadExt& amplitude(int index) const { return amps_[index]; }
    const QuadExt& amplitude(std::string_view bits) const { return amps_[index_of(bits)]; }
    std::span<const QuadExt, kAmplitudes> amplitudes() const { return amps_; }
    long radicand() const { return radicand_; }
    bool is_zero() const;

    friend bool operator==(const PureState5&, const PureState5&) = default;

private:
    Amplitudes amps_{};
    long radicand_ = 1;
};

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

class InvalidOperation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Five unimodular rational 2x2 matrices, one per qubit.
class LocalOperation {
public:
    LocalOperation();
    explicit LocalOperation(std::array<Matrix2, kSlots> matrices);

    const Matrix2& matrix(int slot) const { return g_[slot]; }

private:
    std::array<Matrix2, kSlots> g_;
};

Rational determinant(const Matrix2& m);

/// A'_{i1..i5} = sum_j g1[i1][j1] ... g5[i5][j5] A_{j1..j5}.
PureState5 apply_slocc(const LocalOperation& g, const PureState5& psi);

/// [[1,b],[0,1]] [[1,0],[c,1]] [[1,b2],[0,1]].
Matrix2 sl2_from_shears(const Rational& b, const Rational& c, const Rational& b2);

/// Deterministic rational draws; numerators in [-bound, bound], denominators
/// in [1, bound]. Uses mt19937_64 with modular reduction so results are
/// identical across standard libraries.
class SeededRationals {
public:
    explicit SeededRationals(std::uint64_t seed) : rng_(seed) {}
    Rational next(long bound);
    Integer next_integer(long bound);

private:
    std::mt19937_64 rng_;
};

Matrix2 random_sl2(std::uint64_t seed, long bound);
LocalOperation random_local_operation(std::uint64_t seed, long bound);
/// Random state with rational amplitudes (integers when integral is set).
PureState5 random_rational_state(std::uint64_t seed, long bound, bool integral = false);
/// Tensor product of five random rational qubit vectors.
PureState5 random_product_state(std::uint64_t seed, long bound);

/// Unnormalized representatives of the four Osterloh-Siewert states, k = 1..4.
/// Ket labels are read right to left, e.g. |11100> sets A_{00111}.
PureState5 osterloh_state(int k);

/// State file: {"radicand": n, "amplitudes": {"01011": {"a": "p/q", "b": "r/s"}, ...}}.
PureState5 parse_state_json(std::string_view text);
PureState5 load_state(const std::string& path);
std::string state_to_json(const PureState5& psi);

/// Value of D_x .. D_u or F at psi (numeric mode).
QuadExt evaluate_invariant(const PureState5& psi, Invariant inv);

struct Fingerprint {
    static constexpr std::array<const char*, 9> kRowNames = {"Dx", "Dy", "Dz", "Dt", "Du", "F", "Bx", "C31111", "E11111"};
    std::array<bool, 9> nonzero{};

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Exact nonvanishing pattern of the nine covariant rows. Throws InputError on
/// the zero state.
Fingerprint fingerprint(const PureState5& psi);

class UnsupportedPoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rows of exact partial derivatives d inv / d A_i at a rational point,
/// computed by jet propagation.
std::vector<std::vector<Rational>> jacobian(std::span<const Invariant> invariants, const PureState5& point);

/// Exact rank of the Jacobian over Q. Throws UnsupportedPoint for states with
/// a surd radicand.
int jacobian_rank(std::span<const Invariant> invariants, const PureState5& point);

}  // namespace q5
