/*------------------------------------------------------------------------*/
/*! \file rational.hpp
    \brief exact rational coefficients (GMP-backed)

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <gmpxx.h>

#include <string>

namespace lpac {

/// Exact rational number, always kept in canonical form
/// (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;

/// Builds a canonical rational from numerator/denominator strings.
/// Throws std::invalid_argument on a zero denominator.
Rational make_rational(const std::string& num, const std::string& den = "1");

/// Canonical text form: "n" or "n/d" with d > 1.
std::string rational_to_string(const Rational& q);

}  // namespace lpac
