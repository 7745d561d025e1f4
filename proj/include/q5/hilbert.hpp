#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "q5/rational.hpp"

namespace q5 {

/// degree -> coefficient
using CoefficientTable = std::map<int, Integer>;

/// P(t) / prod_i (1 - t^{d_i}).
struct HilbertSeriesData {
    CoefficientTable numerator;
    std::vector<int> denominator_degrees;

    /// Numerator from the given table; denominator
    /// (1-t^4)^5 (1-t^6) (1-t^8)^5 (1-t^10) (1-t^12)^5.
    static HilbertSeriesData five_qubit(CoefficientTable numerator);
};

std::vector<int> five_qubit_denominator_degrees();

/// Lines "n a_n" (two base-10 integers); blank lines and lines starting with
/// '#' are ignored. Throws InputError on anything else or a repeated degree.
CoefficientTable parse_coefficient_table(std::string_view text);
CoefficientTable load_coefficient_table(const std::string& path);

/// Overrides entries of `table` with those of `corrections`.
CoefficientTable apply_corrections(CoefficientTable table, const CoefficientTable& corrections);

/// Taylor coefficients of P/Q at degrees 0..n_max.
std::vector<Integer> series_expand(const HilbertSeriesData& data, int n_max);

Integer evaluate_at_one(const CoefficientTable& table);

struct DimensionReport {
    int degree = 0;
    Integer dim_character;
    Integer dim_table;
    bool agree() const { return dim_character == dim_table; }
};

struct TableCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Table1Report {
    std::vector<TableCheck> checks;
    /// Degrees n < 52 with a_n != a_{104-n} in the verbatim table.
    std::vector<int> verbatim_palindrome_failures;
    Integer p1_verbatim;
    Integer p1_corrected;
    /// "verbatim", "corrected", or "none"/"both" when the P(1) test does not
    /// single out one reading.
    std::string accepted_reading;
    std::vector<DimensionReport> dimensions;

    bool all_passed() const;
};

inline constexpr long kSecondaryInvariantCount = 3014400;

/// Structural checks of the published numerator under both readings
/// (verbatim, and with the correction layer applied), plus agreement of the
/// accepted reading's expansion with the character sums through
/// `check_degree`.
Table1Report validate_table(const CoefficientTable& verbatim, const CoefficientTable& corrections, int check_degree);

}  // namespace q5
