#include "coxforge/sections.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "coxforge/errors.hpp"

namespace coxforge {

namespace {

using TaylorTerms = std::map<Exponent, Rational, GradedLexGreater>;

// Small binomials for exponents of forms at desk scale.
const Integer& small_binomial(int n, int k) {
  static std::vector<std::vector<Integer>> table;
  while (static_cast<int>(table.size()) <= n) {
    const int row = static_cast<int>(table.size());
    std::vector<Integer> next(row + 1, Integer(1));
    for (int j = 1; j < row; ++j) next[j] = table[row - 1][j - 1] + table[row - 1][j];
    table.push_back(std::move(next));
  }
  return table[n][k];
}

void require_form(const MultiPoly& f) {
  if (f.is_zero()) return;
  const int deg = f.total_degree();
  for (const auto& [e, c] : f.terms()) {
    if (std::accumulate(e.begin(), e.end(), 0) != deg) throw PreconditionError("polynomial is not homogeneous");
  }
}

std::size_t chart_of(const std::vector<Rational>& point) {
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (point[j] != 0) return j;
  }
  throw PreconditionError("point has all coordinates zero");
}

// Taylor coefficients of f / z_chart^deg around the point, indexed by the
// exponents of the affine coordinates (all coordinates except the chart one).
TaylorTerms taylor_expansion(const MultiPoly& f, const std::vector<Rational>& point, std::size_t& chart) {
  if (point.size() != f.vars().size()) throw PreconditionError("point dimension does not match the form");
  require_form(f);
  chart = chart_of(point);
  std::vector<Rational> q(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) q[j] = point[j] / point[chart];

  std::vector<std::size_t> affine;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (j != chart) affine.push_back(j);
  }
  TaylorTerms out;
  Exponent beta(affine.size(), 0);
  for (const auto& [e, c] : f.terms()) {
    auto walk = [&](auto&& self, std::size_t pos, Rational acc) -> void {
      if (acc == 0) return;
      if (pos == affine.size()) {
        auto [it, inserted] = out.try_emplace(beta, acc);
        if (!inserted) {
          it->second += acc;
          if (it->second == 0) out.erase(it);
        }
        return;
      }
      const std::size_t var = affine[pos];
      const int ej = e[var];
      Rational power = 1;  // q_var^(ej - b), built from b = ej downwards
      for (int b = ej; b >= 0; --b) {
        beta[pos] = b;
        self(self, pos + 1, acc * power * Rational(small_binomial(ej, b)));
        power *= q[var];
      }
      beta[pos] = 0;
    };
    walk(walk, 0, c);
  }
  return out;
}

}  // namespace

PointConfig::PointConfig(int n, int r, std::vector<Rational> params) : n_(n), r_(r), params_(std::move(params)) {
  if (n < 2) throw PreconditionError("point configuration needs n >= 2");
  if (r < n + 3) throw PreconditionError("point configuration needs r >= n + 3");
  if (static_cast<int>(params_.size()) != r) {
    throw PreconditionError("point configuration needs exactly r = " + std::to_string(r) + " parameters");
  }
  std::set<Rational> seen;
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (!seen.insert(params_[i]).second) {
      throw PreconditionError("point parameters must be pairwise distinct (a_" + std::to_string(i + 1) +
                              " = " + params_[i].get_str() + " repeats)");
    }
  }
}

PointConfig PointConfig::standard(int n, int r) {
  std::vector<Rational> params;
  for (int i = 1; i <= r; ++i) params.emplace_back(i);
  return PointConfig(n, r, std::move(params));
}

PointConfig PointConfig::random(int n, int r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 7);
  std::set<Rational> seen;
  std::vector<Rational> params;
  while (static_cast<int>(params.size()) < r) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (seen.insert(q).second) params.push_back(q);
  }
  return PointConfig(n, r, std::move(params));
}

std::vector<Rational> PointConfig::point(int i) const {
  if (i < 1 || i > r_) throw PreconditionError("point index out of range");
  std::vector<Rational> p(n_ + 1);
  p[0] = 1;
  for (int j = 1; j <= n_; ++j) p[j] = p[j - 1] * params_[i - 1];
  return p;
}

std::vector<std::string> PointConfig::variables() const { return indexed_names("z", 0, n_); }

FormSpace form_space(const DivisorClass& d, const PointConfig& cfg) {
  if (!(d.ctx() == cfg.lattice())) throw ContextMismatch("class does not live on Bl_r P^n of the configuration");
  FormSpace fs;
  const Integer& deg = d.h()[0];
  if (deg < 0) return fs;
  fs.degree = static_cast<int>(deg.get_si());
  const int n = cfg.n();
  fs.monomials = monomials_of_degree(n + 1, fs.degree);
  const std::size_t cols = fs.monomials.size();

  for (int i = 1; i <= cfg.r(); ++i) {
    if (d.m(i) <= 0) continue;
    const int mult = static_cast<int>(d.m(i).get_si());
    const auto p = cfg.point(i);
    // powers[j][k] = p_j^k
    std::vector<std::vector<Rational>> powers(n + 1, std::vector<Rational>(fs.degree + 1, Rational(1)));
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= fs.degree; ++k) powers[j][k] = powers[j][k - 1] * p[j];
    for (int order = 0; order < mult; ++order) {
      for (const auto& beta : monomials_of_degree(n, order)) {
        RationalVector row(cols);
        for (std::size_t col = 0; col < cols; ++col) {
          const auto& e = fs.monomials[col];
          Rational entry = 1;
          for (int j = 1; j <= n && entry != 0; ++j) {
            const int b = beta[j - 1];
            if (b > e[j]) {
              entry = 0;
            } else {
              entry *= Rational(small_binomial(e[j], b)) * powers[j][e[j] - b];
            }
          }
          row[col] = entry;
        }
        fs.conditions.push_back(std::move(row));
      }
    }
  }
  fs.kernel = kernel_basis(fs.conditions, cols);
  return fs;
}

std::size_t h0(const DivisorClass& d, const PointConfig& cfg) { return form_space(d, cfg).kernel.size(); }

MultiPoly form_from_vector(const std::vector<Exponent>& monomials, const RationalVector& coeffs,
                           const std::vector<std::string>& vars) {
  if (monomials.size() != coeffs.size()) throw PreconditionError("coefficient vector does not match monomials");
  MultiPoly f(vars);
  for (std::size_t i = 0; i < monomials.size(); ++i) f.add_term(monomials[i], coeffs[i]);
  return f;
}

RationalVector vector_from_form(const MultiPoly& f, const std::vector<Exponent>& monomials) {
  std::map<Exponent, std::size_t> position;
  for (std::size_t i = 0; i < monomials.size(); ++i) position.emplace(monomials[i], i);
  RationalVector v(monomials.size());
  for (const auto& [e, c] : f.terms()) {
    auto it = position.find(e);
    if (it == position.end()) throw PreconditionError("form has a monomial outside the basis");
    v[it->second] = c;
  }
  return v;
}

MultiPoly section_of(const DivisorClass& d, const PointConfig& cfg) {
  const FormSpace fs = form_space(d, cfg);
  if (fs.kernel.size() != 1) {
    throw PreconditionError("section_of needs h0 = 1, got h0 = " + std::to_string(fs.kernel.size()));
  }
  MultiPoly f = form_from_vector(fs.monomials, fs.kernel.front(), cfg.variables());
  f *= 1 / f.leading_coefficient();
  return f;
}

int mult_at_point(const MultiPoly& f, const std::vector<Rational>& point) {
  if (f.is_zero()) return kInfiniteMultiplicity;
  std::size_t chart = 0;
  const auto taylor = taylor_expansion(f, point, chart);
  if (taylor.empty()) return kInfiniteMultiplicity;
  // Last entry in graded-lex descending order has the smallest total degree.
  const auto& low = taylor.rbegin()->first;
  return std::accumulate(low.begin(), low.end(), 0);
}

int mult_along_curve(const MultiPoly& f, const PointConfig& cfg) {
  if (static_cast<int>(f.vars().size()) != cfg.n() + 1) throw PreconditionError("form is not over z_0..z_n");
  if (f.is_zero()) return kInfiniteMultiplicity;
  require_form(f);
  const int n = cfg.n();
  // coefficient of u^beta in f(1, s + u_1, ..., s^n + u_n), as a polynomial in s
  std::map<Exponent, std::map<int, Rational>> coeffs;
  Exponent beta(n, 0);
  for (const auto& [e, c] : f.terms()) {
    auto walk = [&](auto&& self, int j, Rational acc, int s_degree) -> void {
      if (j > n) {
        auto& poly = coeffs[beta];
        poly[s_degree] += acc;
        if (poly[s_degree] == 0) poly.erase(s_degree);
        return;
      }
      for (int b = 0; b <= e[j]; ++b) {
        beta[j - 1] = b;
        self(self, j + 1, acc * Rational(small_binomial(e[j], b)), s_degree + j * (e[j] - b));
      }
      beta[j - 1] = 0;
    };
    walk(walk, 1, c, 0);
  }
  int best = kInfiniteMultiplicity;
  for (const auto& [b, poly] : coeffs) {
    if (poly.empty()) continue;
    best = std::min(best, std::accumulate(b.begin(), b.end(), 0));
  }
  return best;
}

MultiPoly initial_form_at_point(const MultiPoly& f, const std::vector<Rational>& point) {
  if (f.is_zero()) throw PreconditionError("initial form of the zero polynomial");
  std::size_t chart = 0;
  const auto taylor = taylor_expansion(f, point, chart);
  std::vector<std::string> names;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (j != chart) names.push_back("u" + std::to_string(j));
  }
  MultiPoly out(names);
  const auto& low = taylor.rbegin()->first;
  const int order = std::accumulate(low.begin(), low.end(), 0);
  for (const auto& [b, c] : taylor) {
    if (std::accumulate(b.begin(), b.end(), 0) == order) out.add_term(b, c);
  }
  return out;
}

GenerationTester::GenerationTester(PointConfig cfg, GenerationCaps caps) : cfg_(std::move(cfg)), caps_(caps) {
  if (cfg_.n() > caps_.max_n) {
    throw CapExceeded("generation test limited to n <= " + std::to_string(caps_.max_n));
  }
  minimal_ = enumerate_minimal(cfg_.blowup());
  for (const auto& e : minimal_) sections_.push_back(section_of(e, cfg_));
}

GenerationReport GenerationTester::test(const DivisorClass& d) const {
  if (!(d.ctx() == cfg_.lattice())) throw ContextMismatch();
  GenerationReport report;
  const Integer& deg = d.h()[0];
  if (deg < 0) {
    report.generated = true;
    return report;
  }
  const std::size_t monomial_count = binomial(deg.get_ui() + cfg_.n(), cfg_.n()).get_ui();
  if (monomial_count > caps_.max_monomials) {
    throw CapExceeded("degree-" + deg.get_str() + " forms exceed the monomial cap of " +
                      std::to_string(caps_.max_monomials));
  }
  const FormSpace fs = form_space(d, cfg_);
  report.h0 = fs.kernel.size();
  if (report.h0 == 0) {
    report.generated = true;
    return report;
  }

  const int r = cfg_.r();
  std::vector<long> need(r);
  for (int i = 0; i < r; ++i) need[i] = d.m()[i].get_si();
  std::vector<long> have(r, 0);
  IncrementalSpan span(fs.monomials.size());
  std::size_t nodes = 0;
  const auto vars = cfg_.variables();

  auto in_space = [&](const RationalVector& v) {
    for (const auto& row : fs.conditions) {
      Rational acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (row[j] != 0 && v[j] != 0) acc += row[j] * v[j];
      }
      if (acc != 0) return false;
    }
    return true;
  };

  // Returns true once the span reaches h0.
  auto search = [&](auto&& self, long remaining, std::size_t start, const MultiPoly& product) -> bool {
    if (++nodes > caps_.max_nodes) {
      throw CapExceeded("generation test exceeded " + std::to_string(caps_.max_nodes) + " search nodes");
    }
    for (int i = 0; i < r; ++i) {
      if (have[i] + remaining < need[i]) return false;
    }
    if (remaining == 0) {
      ++report.products;
      RationalVector v = vector_from_form(product, fs.monomials);
      if (!in_space(v)) throw Error("product of generator sections fails the vanishing conditions");
      span.add(std::move(v));
      return span.rank() == report.h0;
    }
    for (std::size_t idx = start; idx < minimal_.size(); ++idx) {
      const auto& e = minimal_[idx];
      const long k = e.h()[0].get_si();
      if (k > remaining) continue;
      for (int i = 0; i < r; ++i) have[i] += e.m()[i].get_si();
      const bool done = self(self, remaining - k, idx, product * sections_[idx]);
      for (int i = 0; i < r; ++i) have[i] -= e.m()[i].get_si();
      if (done) return true;
    }
    return false;
  };
  search(search, deg.get_si(), 0, MultiPoly::constant(vars, 1));
  report.span_dim = span.rank();
  report.generated = report.span_dim == report.h0;
  return report;
}

GenerationReport generation_test(const DivisorClass& d, const PointConfig& cfg, GenerationCaps caps) {
  return GenerationTester(cfg, caps).test(d);
}

}  // namespace coxforge
