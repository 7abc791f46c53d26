#include "coxforge/nagata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "coxforge/errors.hpp"
#include "coxforge/linalg.hpp"

namespace coxforge {

NagataParams::NagataParams(std::vector<Rational> params) : params_(std::move(params)) {
  if (params_.size() < 5) throw PreconditionError("Nagata action needs r >= 5");
  std::set<Rational> seen;
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (!seen.insert(params_[i]).second) {
      throw PreconditionError("Nagata parameters must be pairwise distinct (a_" + std::to_string(i + 1) + " repeats)");
    }
  }
}

NagataParams NagataParams::standard(int r) {
  std::vector<Rational> params;
  for (int i = 1; i <= r; ++i) params.emplace_back(i);
  return NagataParams(std::move(params));
}

NagataParams NagataParams::random(int r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  std::set<Rational> seen;
  std::vector<Rational> params;
  while (static_cast<int>(params.size()) < r) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (seen.insert(q).second) params.push_back(q);
  }
  return NagataParams(std::move(params));
}

std::vector<std::string> NagataParams::variables() const {
  auto vars = indexed_names("x", 1, r());
  for (auto& v : indexed_names("y", 1, r())) vars.push_back(std::move(v));
  vars.emplace_back("t1");
  vars.emplace_back("t2");
  return vars;
}

MultiPoly NagataParams::x(int i) const { return MultiPoly::variable(variables(), static_cast<std::size_t>(i - 1)); }

MultiPoly NagataParams::y(int i) const {
  return MultiPoly::variable(variables(), static_cast<std::size_t>(r() + i - 1));
}

MultiPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw PreconditionError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  }
  const auto& vars = m[0][0].vars();
  // minor(mask): determinant of rows n-popcount(mask).. and the columns in mask
  std::map<unsigned, MultiPoly> memo;
  auto minor = [&](auto&& self, unsigned mask) -> MultiPoly {
    const int size = __builtin_popcount(mask);
    if (size == 0) return MultiPoly::constant(vars, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(size);
    MultiPoly total(vars);
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (1U << col))) continue;
      const MultiPoly& entry = m[row][col];
      if (!entry.is_zero()) {
        MultiPoly term = entry * self(self, mask & ~(1U << col));
        if (sign > 0) {
          total += term;
        } else {
          total -= term;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, total);
    return total;
  };
  return minor(minor, (n == 32 ? ~0U : ((1U << n) - 1U)));
}

MultiPoly build_F(const std::vector<int>& indices, const NagataParams& np) {
  const int size = static_cast<int>(indices.size());
  if (size % 2 == 0) throw PreconditionError("F_I needs |I| odd, got " + std::to_string(size));
  std::set<int> unique(indices.begin(), indices.end());
  if (static_cast<int>(unique.size()) != size) throw PreconditionError("F_I index set has repeats");
  for (int i : indices) {
    if (i < 1 || i > np.r()) throw PreconditionError("F_I index out of range");
  }
  const int k = (size - 1) / 2;
  PolyMatrix m;
  for (int j = 0; j <= k; ++j) {
    std::vector<MultiPoly> row;
    for (int i : indices) {
      Rational power = 1;
      for (int t = 0; t < j; ++t) power *= np.a(i);
      row.push_back(power * np.x(i));
    }
    m.push_back(std::move(row));
  }
  for (int j = 0; j < k; ++j) {
    std::vector<MultiPoly> row;
    for (int i : indices) {
      Rational power = 1;
      for (int t = 0; t < j; ++t) power *= np.a(i);
      row.push_back(power * np.y(i));
    }
    m.push_back(std::move(row));
  }
  return determinant(m);
}

MultiPoly nagata_substitute(const MultiPoly& p, const NagataParams& np) {
  const auto vars = np.variables();
  if (p.vars() != vars) throw PreconditionError("polynomial is not over x, y, t variables of this action");
  const std::size_t t1 = vars.size() - 2;
  const std::size_t t2 = vars.size() - 1;
  if (p.degree_in(t1) > 0 || p.degree_in(t2) > 0) throw PreconditionError("polynomial already involves t1, t2");
  std::vector<MultiPoly> images;
  for (std::size_t v = 0; v < vars.size(); ++v) images.push_back(MultiPoly::variable(vars, v));
  const MultiPoly t1v = MultiPoly::variable(vars, t1);
  const MultiPoly t2v = MultiPoly::variable(vars, t2);
  for (int i = 1; i <= np.r(); ++i) {
    images[np.r() + i - 1] = np.y(i) + (t1v + np.a(i) * t2v) * np.x(i);
  }
  return p.substitute(images, vars);
}

bool is_invariant(const MultiPoly& p, const NagataParams& np) { return (nagata_substitute(p, np) - p).is_zero(); }

TorusWeight torus_weight(const MultiPoly& p, const NagataParams& np) {
  if (p.vars() != np.variables()) throw PreconditionError("polynomial is not over x, y, t variables of this action");
  if (p.is_zero()) throw PreconditionError("torus weight of the zero polynomial");
  const int r = np.r();
  const auto t_at = static_cast<std::size_t>(2 * r);
  bool first = true;
  TorusWeight out;
  for (const auto& [e, c] : p.terms()) {
    if (e[t_at] != 0 || e[t_at + 1] != 0) throw PreconditionError("torus weight needs a polynomial free of t1, t2");
    TorusWeight tw;
    tw.w.resize(r);
    for (int i = 0; i < r; ++i) {
      tw.w[i] = e[i] + e[r + i];
      tw.deg_x += e[i];
      tw.deg_y += e[r + i];
    }
    if (first) {
      out = tw;
      first = false;
      continue;
    }
    for (int i = 0; i < r; ++i) {
      if (tw.w[i] != out.w[i]) {
        throw PreconditionError("polynomial is not homogeneous in the pair (x" + std::to_string(i + 1) + ", y" +
                                std::to_string(i + 1) + ")");
      }
    }
    if (tw.deg_x != out.deg_x) throw PreconditionError("polynomial is not homogeneous in the x variables");
    if (tw.deg_y != out.deg_y) throw PreconditionError("polynomial is not homogeneous in the y variables");
  }
  return out;
}

DivisorClass divisor_class_of(const MultiPoly& p, const NagataParams& np, int n) {
  if (np.r() != n + 3) throw PreconditionError("divisor correspondence needs r = n + 3");
  const TorusWeight tw = torus_weight(p, np);
  const int d = tw.deg_y;
  std::vector<Integer> m;
  int total = 0;
  for (int wi : tw.w) {
    m.emplace_back(d - wi);
    total += d - wi;
  }
  if (tw.deg_x != (n + 2) * d - total) {
    throw PreconditionError("deg_x = " + std::to_string(tw.deg_x) + " but (n+2)d - sum m_i = " +
                            std::to_string((n + 2) * d - total) + ": not the image of a section");
  }
  return DivisorClass::from_hm(LatticeContext::blowup(n, n + 3), Integer(d), std::move(m));
}

std::vector<MultiPoly> build_J(const NagataParams& np, int n) {
  if (np.r() != n + 3) throw PreconditionError("J invariants need r = n + 3");
  const int r = np.r();
  RationalMatrix conditions(2, RationalVector(r));
  for (int i = 0; i < r; ++i) {
    conditions[0][i] = 1;
    conditions[1][i] = np.params()[i];
  }
  const auto basis = kernel_basis(conditions, static_cast<std::size_t>(r));
  const auto vars = np.variables();
  std::vector<MultiPoly> out;
  for (const auto& c : basis) {
    MultiPoly j(vars);
    for (int i = 1; i <= r; ++i) {
      if (c[i - 1] == 0) continue;
      Exponent e(vars.size(), 0);
      for (int t = 1; t <= r; ++t) {
        if (t != i) e[t - 1] = 1;
      }
      e[r + i - 1] = 1;
      j.add_term(e, c[i - 1]);
    }
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<std::vector<int>> odd_subsets(int r) {
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= r; size += 2) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
      out.push_back(idx);
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == r - size + pos + 1) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace coxforge
