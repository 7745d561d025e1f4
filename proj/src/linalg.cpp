#include "q5/linalg.hpp"

#include <utility>

namespace q5 {

int exact_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        Integer lcm = 1;
        for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Integer> ints;
        ints.reserve(ncols);
        for (const auto& v : row) ints.push_back(Integer(v.get_num() * (lcm / v.get_den())));
        m.push_back(std::move(ints));
    }

    int rank = 0;
    Integer prev_pivot = 1;
    const std::size_t nrows = m.size();
    for (std::size_t col = 0; col < ncols && static_cast<std::size_t>(rank) < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && m[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[rank], m[pivot]);
        const Integer& p = m[rank][col];
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            for (std::size_t c = col + 1; c < ncols; ++c) {
                Integer v = m[r][c] * p - m[r][col] * m[rank][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                m[r][c] = std::move(v);
            }
            m[r][col] = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

}  // namespace q5
