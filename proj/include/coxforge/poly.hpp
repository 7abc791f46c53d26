#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "coxforge/numbers.hpp"

namespace coxforge {

using Exponent = std::vector<int>;

/// Graded-lex: higher total degree first, then lexicographically larger
/// exponent on the earlier variable.
struct GradedLexGreater {
  bool operator()(const Exponent& lhs, const Exponent& rhs) const;
};

/// Sparse polynomial with exact rational coefficients over an ordered list of
/// named variables. Terms are kept in descending graded-lex order and never
/// store a zero coefficient.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GradedLexGreater>;

  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
  static MultiPoly monomial(std::vector<std::string> vars, Exponent exps, const Rational& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t var_index(const std::string& name) const;

  void add_term(const Exponent& exps, const Rational& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in one variable (max over terms).
  int degree_in(std::size_t var) const;
  /// First coefficient in graded-lex order. Throws on zero.
  const Rational& leading_coefficient() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(Rational c, MultiPoly p) { return p *= c; }

  MultiPoly pow(unsigned k) const;

  /// Replaces variable i by images[i]; every image lives over `target_vars`.
  MultiPoly substitute(const std::vector<MultiPoly>& images, const std::vector<std::string>& target_vars) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Partial derivative with respect to variable `var`.
  MultiPoly derivative(std::size_t var) const;

  bool operator==(const MultiPoly& other) const;

  std::string to_string() const;

 private:
  void require_same_vars(const MultiPoly& other) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

/// All exponent vectors of total degree d in `nvars` variables, graded-lex descending.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d);

std::vector<std::string> indexed_names(const std::string& prefix, int first, int last);

}  // namespace coxforge
