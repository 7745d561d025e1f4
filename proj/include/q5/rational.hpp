#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace q5 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when two exact values cannot be combined (e.g. different surds).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised on malformed textual or file input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Parses "p", "-p", "p/q" with decimal digits only.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

bool is_square_free(long n);

Integer binomial(long n, long k);

}  // namespace q5
