#pragma once

#include <gmpxx.h>

#include <string>

namespace svyt {

// Exact arithmetic used throughout the counting layer.  No floating point.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(long long n);

// 0 whenever the coefficient is combinatorially empty (k < 0, k > n, n < 0).
Int binomial(long long n, long long k);

// Number of words with a copies of one letter, b of another, c of a third.
Int trinomial(long long a, long long b, long long c);

inline std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v);

}  // namespace svyt
