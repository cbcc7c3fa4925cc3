#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "errors.hpp"

namespace realgz {

using BigInt = mpz_class;

/// Exact rational number; GMP keeps the result of every arithmetic
/// operation in lowest terms with a positive denominator.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den = 1)
{
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Numerator of an integer-valued rational, or nullopt.
inline std::optional<BigInt> as_integer(const Rational& r)
{
    if (!is_integer(r)) {
        return std::nullopt;
    }
    return BigInt(r.get_num());
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace realgz
