#pragma once

#include <vector>

#include "q5/rational.hpp"

namespace q5 {

/// Rank over Q by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers by the lcm of its denominators.
int exact_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace q5
