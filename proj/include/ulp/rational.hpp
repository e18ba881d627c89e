#pragma once

#include <gmpxx.h>

#include <string>

namespace ulp {

using Rational = mpq_class;
using BigInt = mpz_class;

inline double to_double(const Rational& q) { return q.get_d(); }

// Exact value of a finite double.
inline Rational exact_rational(double v) { return Rational(v); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace ulp
