#include "q5/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace q5 {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InputError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::rectangle2(int m) { return m == 0 ? Partition() : Partition{m, m}; }

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Integer z_mu(const Partition& mu) {
    Integer z = 1;
    const auto& p = mu.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const auto mult = static_cast<unsigned long>(j - i);
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), mult);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p[i]), mult);
        z *= power * fact;
        i = j;
    }
    return z;
}

namespace {

// Beta-set of a partition with exactly `len` beads: lambda_i + (len - 1 - i).
std::vector<int> beta_set(const std::vector<int>& shape) {
    const int len = static_cast<int>(shape.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);
    return beta;
}

std::vector<int> shape_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int len = static_cast<int>(beta.size());
    std::vector<int> shape;
    for (int i = 0; i < len; ++i) {
        int part = beta[i] - (len - 1 - i);
        if (part > 0) shape.push_back(part);
    }
    return shape;
}

}  // namespace

Integer MurnaghanNakayama::eval(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t from) {
    if (from == cycles.size()) return shape.empty() ? 1 : 0;
    std::vector<int> rest(cycles.begin() + static_cast<std::ptrdiff_t>(from), cycles.end());
    auto key = std::make_pair(shape, rest);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const int r = cycles[from];
    const std::vector<int> beta = beta_set(shape);
    Integer total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // Leg length = number of beads strictly between target and beta[i].
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> moved = beta;
        moved[i] = target;
        Integer sub = eval(shape_from_beta(std::move(moved)), cycles, from + 1);
        if (between % 2) total -= sub;
        else total += sub;
    }
    cache_.emplace(std::move(key), total);
    return total;
}

Integer MurnaghanNakayama::character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw InputError("character needs |lambda| = |mu|, got " + std::to_string(lambda.size()) + " and " +
                         std::to_string(mu.size()));
    return eval(lambda.parts(), mu.parts(), 0);
}

Integer mn_character(const Partition& lambda, const Partition& mu) {
    MurnaghanNakayama mn;
    return mn.character(lambda, mu);
}

Rational character_inner_product(const Partition& lambda, const Partition& kappa) {
    if (lambda.size() != kappa.size()) return 0;
    MurnaghanNakayama mn;
    Rational sum = 0;
    for (const auto& mu : partitions_of(lambda.size()))
        sum += Rational(mn.character(lambda, mu) * mn.character(kappa, mu), z_mu(mu));
    sum.canonicalize();
    return sum;
}

Integer dim_invariants(int degree, int qubits) {
    if (degree < 0) throw InputError("degree must be non-negative");
    if (degree % 2) return 0;
    const int m = degree / 2;
    const Partition shape = Partition::rectangle2(m);
    MurnaghanNakayama mn;
    Rational sum = 0;
    for (const auto& mu : partitions_of(degree)) {
        Integer chi = mn.character(shape, mu);
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), chi.get_mpz_t(), static_cast<unsigned long>(qubits));
        Rational term(power, z_mu(mu));
        term.canonicalize();
        sum += term;
    }
    sum.canonicalize();
    if (sum.get_den() != 1)
        throw std::logic_error("character sum for degree " + std::to_string(degree) + " is not an integer");
    return sum.get_num();
}

}  // namespace q5
