#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "q5/rational.hpp"

namespace q5 {

/// Integer partition with weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// Two-row shape [m, m] (empty for m = 0).
    static Partition rectangle2(int m);

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n, in decreasing lexicographic order starting at (n).
std::vector<Partition> partitions_of(int n);

/// Centralizer order prod_i i^{m_i} m_i! of a permutation of cycle type mu.
Integer z_mu(const Partition& mu);

/// Border-strip recursion on beta-sets, memoized on (shape, remaining cycle
/// type). One evaluator can be shared across many character values.
class MurnaghanNakayama {
public:
    /// chi^lambda(mu); throws InputError if |lambda| != |mu|.
    Integer character(const Partition& lambda, const Partition& mu);

    std::size_t cache_size() const { return cache_.size(); }

private:
    Integer eval(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t from);

    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> cache_;
};

Integer mn_character(const Partition& lambda, const Partition& mu);

/// <chi^lambda, chi^kappa> = sum_mu chi^lambda(mu) chi^kappa(mu) / z_mu.
Rational character_inner_product(const Partition& lambda, const Partition& kappa);

/// Dimension of degree-d SL(2)^k invariants of k qubits: for d = 2m,
/// sum over mu |- 2m of chi^{[m,m]}(mu)^k / z_mu; 0 for odd d.
/// The class sum must clear to an integer; a fractional result throws
/// std::logic_error.
Integer dim_invariants(int degree, int qubits = 5);

}  // namespace q5
