#include "coxforge/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "coxforge/errors.hpp"

namespace coxforge {

bool GradedLexGreater::operator()(const Exponent& lhs, const Exponent& rhs) const {
  const int dl = std::accumulate(lhs.begin(), lhs.end(), 0);
  const int dr = std::accumulate(rhs.begin(), rhs.end(), 0);
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  if (index >= vars.size()) throw PreconditionError("variable index out of range");
  MultiPoly p(std::move(vars));
  Exponent e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  return variable(p.vars_, p.var_index(name));
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponent exps, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(exps, c);
  return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw PreconditionError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponent& exps, const Rational& c) {
  if (exps.size() != vars_.size()) throw PreconditionError("exponent length does not match variables");
  if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; })) {
    throw PreconditionError("negative exponent");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(std::size_t var) const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

void MultiPoly::require_same_vars(const MultiPoly& other) const {
  if (vars_ != other.vars_) throw PreconditionError("polynomials over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.require_same_vars(rhs);
  MultiPoly out(lhs.vars_);
  const std::size_t n = lhs.vars_.size();
  Exponent e(n);
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images,
                                const std::vector<std::string>& target_vars) const {
  if (images.size() != vars_.size()) throw PreconditionError("substitution needs one image per variable");
  for (const auto& img : images) {
    if (img.vars_ != target_vars) throw PreconditionError("substitution image over the wrong variables");
  }
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw PreconditionError("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw PreconditionError("variable index out of range");
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    const bool is_const = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    bool need_star = false;
    if (mag != 1 || is_const) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      out << vars_[i];
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
    first = false;
  }
  return out.str();
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  if (d < 0 || nvars == 0) return out;
  Exponent e(nvars, 0);
  // Recursive fill yields lexicographically descending order for fixed degree.
  auto fill = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == nvars) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  fill(fill, 0, d);
  return out;
}

std::vector<std::string> indexed_names(const std::string& prefix, int first, int last) {
  std::vector<std::string> names;
  for (int i = first; i <= last; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace coxforge
