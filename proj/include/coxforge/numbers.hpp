#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace coxforge {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);
std::string format_integer(const Integer& z);

Integer ceil_div(const Integer& num, const Integer& den);
Integer binomial(unsigned long n, unsigned long k);

/// Cap overrides come from COXFORGE_CAP when set, otherwise `fallback`.
std::size_t cap_from_env(std::size_t fallback);

}  // namespace coxforge
