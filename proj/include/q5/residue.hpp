#pragma once

#include <string>
#include <vector>

#include "q5/poly.hpp"
#include "q5/univariate.hpp"

namespace q5 {

/// (1 - coeff * mono)^multiplicity, always found in a denominator.
struct BinomialFactor {
    Rational coeff = 1;
    Monomial mono;
    int multiplicity = 1;

    friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
    friend bool operator<(const BinomialFactor& a, const BinomialFactor& b) {
        if (!(a.mono == b.mono)) return a.mono < b.mono;
        if (a.coeff != b.coeff) return a.coeff < b.coeff;
        return a.multiplicity < b.multiplicity;
    }
};

/// Variables ordered by magnitude in the iterated Laurent field where the
/// constant terms are taken, together with the order in which torus
/// variables are integrated out.
class ContourOrder {
public:
    /// `smallest_first`: every variable that may occur, from the
    /// infinitesimally smallest to the largest. `elimination`: variables to
    /// integrate out, in order.
    ContourOrder(std::vector<Var> smallest_first, std::vector<Var> elimination);

    /// |t| << |u_k| << ... << |u_1|, integrating u_1 first.
    static ContourOrder standard(int k);
    /// Same field, integrating u_k first.
    static ContourOrder standard_reversed(int k);

    /// True when the monomial tends to zero in the field: its exponent in
    /// the smallest variable it mentions is positive. The unit monomial is
    /// not small.
    bool is_small(const Monomial& m) const;

    const std::vector<Var>& elimination() const { return elimination_; }
    const std::vector<Var>& smallest_first() const { return smallest_first_; }
    std::string describe() const;

private:
    int rank(Var v) const;
    std::vector<Var> smallest_first_;
    std::vector<Var> elimination_;
};

/// prefactor * numerator / prod (1 - c_i M_i)^{r_i}, numerator a Laurent
/// polynomial.
class FactoredRational {
public:
    RationalPoly numerator;
    Monomial prefactor;
    std::vector<BinomialFactor> factors;

    /// Folds the prefactor into the numerator, rewrites every factor so its
    /// monomial is small in `order`, folds constant factors into the
    /// numerator, and merges repeated factors. Throws DomainError on a
    /// factor (1 - 1).
    void canonicalize(const ContourOrder& order);
};

using ResidueSum = std::vector<FactoredRational>;

enum class WeylNumerator {
    /// prod (1 - u_i^{-2}): the SL(2) Weyl density.
    kSigned,
    /// prod (1 + u_i^{-2}), as printed in some references; gives a different
    /// series and is kept for comparison only.
    kPrinted,
};

/// Molien-Weyl integrand for k qubits, measure du_i/u_i absorbed:
///   prod_i u_i^{-1} (1 -+ u_i^{-2}) / prod_{s in {+-1}^k} (1 - t u_1^{s_1}..u_k^{s_k}).
/// Integrating out u_1..u_k gives the Hilbert series.
FactoredRational build_integrand(int k, WeylNumerator numerator = WeylNumerator::kSigned);

/// Sum of the residues of F dx at the poles inside the contour (the origin
/// included), i.e. the constant term of x F in the iterated Laurent field.
/// The result is a sum of rational functions free of x; terms with equal
/// denominators are merged.
ResidueSum inner_residue(const FactoredRational& f, Var x, const ContourOrder& order);

/// t^0-normalized univariate rational function num/den with gcd(num, den) = 1
/// and den(0) = 1.
struct HilbertRational {
    UPoly numerator;
    UPoly denominator;

    std::vector<Rational> series(int n_max) const;
    std::string str() const;
    friend bool operator==(const HilbertRational&, const HilbertRational&) = default;
};

/// Reduces num/den to lowest terms with den(0) = 1.
HilbertRational reduce_rational(const UPoly& num, const UPoly& den);

/// Sum of terms N_j(t) / prod (1 - c t^e)^r in the single variable t, over
/// the common multiple of their denominators. Throws std::logic_error if any
/// other variable is left.
HilbertRational sum_univariate(const ResidueSum& terms, Var t);

struct ResidueOptions {
    /// k = 5 runs far beyond test budgets and is refused unless set.
    bool allow_long = false;
    WeylNumerator numerator = WeylNumerator::kSigned;
};

struct ResidueStats {
    /// Number of summands after each elimination step.
    std::vector<std::size_t> terms_after_step;
};

/// Hilbert series of SL(2)^k invariants of k qubits by iterated residues.
/// Throws InputError for k outside 1..5, or k = 5 without allow_long.
HilbertRational hilbert_series_residue(int k, const ContourOrder& order, const ResidueOptions& options = {},
                                       ResidueStats* stats = nullptr);
HilbertRational hilbert_series_residue(int k, const ResidueOptions& options = {});

}  // namespace q5
