#include "coxforge/numbers.hpp"

#include <cstdlib>

#include "coxforge/errors.hpp"

namespace coxforge {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw PreconditionError("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw PreconditionError("malformed rational literal '" + text + "'");
  }
  if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

std::string format_integer(const Integer& z) { return z.get_str(10); }

Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::size_t cap_from_env(std::size_t fallback) {
  const char* raw = std::getenv("COXFORGE_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw PreconditionError(std::string("COXFORGE_CAP must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace coxforge
