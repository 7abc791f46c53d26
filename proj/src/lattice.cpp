#include "coxforge/lattice.hpp"

#include <numeric>
#include <sstream>

#include "coxforge/errors.hpp"

namespace coxforge {

namespace {

void require_same(const LatticeContext& lhs, const LatticeContext& rhs) {
  if (!(lhs == rhs)) {
    throw ContextMismatch("context mismatch: " + lhs.to_string() + " vs " + rhs.to_string());
  }
}

// Appends "+ 3X" style terms; `sign` flips the stored coefficient.
void append_terms(std::ostringstream& out, bool& first, const std::vector<Integer>& coeffs,
                  int sign, const std::string& symbol, bool index_symbols) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Integer c = sign * coeffs[i];
    if (c == 0) continue;
    bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (mag != 1) out << mag.get_str();
    out << symbol;
    if (index_symbols) out << (i + 1);
    first = false;
  }
}

std::size_t hash_integers(std::size_t seed, const std::vector<Integer>& values) {
  for (const auto& v : values) {
    std::size_t h = std::hash<long>{}(v.fits_slong_p() ? v.get_si() : static_cast<long>(mpz_size(v.get_mpz_t())));
    seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

}  // namespace

LatticeContext::LatticeContext(int a, int b, int c) : a_(a), b_(b), c_(c) {
  if (a < 2 || b < 1 || c < 2) {
    throw PreconditionError("invalid context (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + "): need a >= 2, b >= 1, c >= 2");
  }
  if (c == 2 && a <= 2) {
    throw PreconditionError("invalid context (" + std::to_string(a) + "," + std::to_string(b) +
                            ",2): c = 2 requires a > 2");
  }
}

LatticeContext LatticeContext::blowup(int n, int r) {
  if (n < 2) throw PreconditionError("blow-up of P^n needs n >= 2");
  if (r < n + 2) throw PreconditionError("blow-up of P^n needs at least n + 2 points");
  return LatticeContext(2, r - n - 1, n + 1);
}

std::string LatticeContext::to_string() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + ")";
}

DivisorClass::DivisorClass(LatticeContext ctx, std::vector<Integer> h, std::vector<Integer> m)
    : ctx_(ctx), h_(std::move(h)), m_(std::move(m)) {
  if (static_cast<int>(h_.size()) != ctx_.hyperplanes() || static_cast<int>(m_.size()) != ctx_.r()) {
    throw PreconditionError("divisor coordinates do not match context " + ctx_.to_string());
  }
}

DivisorClass DivisorClass::zero(const LatticeContext& ctx) {
  return DivisorClass(ctx, std::vector<Integer>(ctx.hyperplanes()), std::vector<Integer>(ctx.r()));
}

DivisorClass DivisorClass::hyperplane(const LatticeContext& ctx, int i) {
  if (i < 1 || i > ctx.hyperplanes()) throw PreconditionError("hyperplane index out of range");
  auto d = zero(ctx);
  d.h_[i - 1] = 1;
  return d;
}

DivisorClass DivisorClass::exceptional(const LatticeContext& ctx, int j) {
  if (j < 1 || j > ctx.r()) throw PreconditionError("exceptional index out of range");
  auto d = zero(ctx);
  d.m_[j - 1] = -1;
  return d;
}

DivisorClass DivisorClass::from_hm(const LatticeContext& ctx, Integer d, std::vector<Integer> m) {
  if (ctx.a() != 2) throw PreconditionError("from_hm needs an a = 2 context");
  return DivisorClass(ctx, {std::move(d)}, std::move(m));
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same(ctx_, other.ctx_);
  for (std::size_t i = 0; i < h_.size(); ++i) h_[i] += other.h_[i];
  for (std::size_t j = 0; j < m_.size(); ++j) m_[j] += other.m_[j];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same(ctx_, other.ctx_);
  for (std::size_t i = 0; i < h_.size(); ++i) h_[i] -= other.h_[i];
  for (std::size_t j = 0; j < m_.size(); ++j) m_[j] -= other.m_[j];
  return *this;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out = *this;
  for (auto& v : out.h_) v = -v;
  for (auto& v : out.m_) v = -v;
  return out;
}

DivisorClass operator*(const Integer& k, const DivisorClass& d) {
  DivisorClass out = d;
  for (auto& v : out.h_) v *= k;
  for (auto& v : out.m_) v *= k;
  return out;
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  return ctx_ == other.ctx_ && h_ == other.h_ && m_ == other.m_;
}

bool DivisorClass::operator<(const DivisorClass& other) const {
  require_same(ctx_, other.ctx_);
  if (h_ != other.h_) return h_ < other.h_;
  return m_ < other.m_;
}

std::string DivisorClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  append_terms(out, first, h_, 1, "H", ctx_.a() > 2);
  append_terms(out, first, m_, -1, "E", true);
  if (first) out << '0';
  return out.str();
}

CurveClass::CurveClass(LatticeContext ctx, std::vector<Integer> l, std::vector<Integer> e)
    : ctx_(ctx), l_(std::move(l)), e_(std::move(e)) {
  if (static_cast<int>(l_.size()) != ctx_.hyperplanes() || static_cast<int>(e_.size()) != ctx_.r()) {
    throw PreconditionError("curve coordinates do not match context " + ctx_.to_string());
  }
}

CurveClass CurveClass::line(const LatticeContext& ctx, int i) {
  if (i < 1 || i > ctx.hyperplanes()) throw PreconditionError("line index out of range");
  std::vector<Integer> l(ctx.hyperplanes());
  l[i - 1] = 1;
  return CurveClass(ctx, std::move(l), std::vector<Integer>(ctx.r()));
}

CurveClass CurveClass::exceptional_line(const LatticeContext& ctx, int j) {
  if (j < 1 || j > ctx.r()) throw PreconditionError("exceptional line index out of range");
  std::vector<Integer> e(ctx.r());
  e[j - 1] = 1;
  return CurveClass(ctx, std::vector<Integer>(ctx.hyperplanes()), std::move(e));
}

CurveClass& CurveClass::operator+=(const CurveClass& other) {
  require_same(ctx_, other.ctx_);
  for (std::size_t i = 0; i < l_.size(); ++i) l_[i] += other.l_[i];
  for (std::size_t j = 0; j < e_.size(); ++j) e_[j] += other.e_[j];
  return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& other) {
  require_same(ctx_, other.ctx_);
  for (std::size_t i = 0; i < l_.size(); ++i) l_[i] -= other.l_[i];
  for (std::size_t j = 0; j < e_.size(); ++j) e_[j] -= other.e_[j];
  return *this;
}

CurveClass operator*(const Integer& k, const CurveClass& g) {
  CurveClass out = g;
  for (auto& v : out.l_) v *= k;
  for (auto& v : out.e_) v *= k;
  return out;
}

bool CurveClass::operator==(const CurveClass& other) const {
  return ctx_ == other.ctx_ && l_ == other.l_ && e_ == other.e_;
}

bool CurveClass::operator<(const CurveClass& other) const {
  require_same(ctx_, other.ctx_);
  if (l_ != other.l_) return l_ < other.l_;
  return e_ < other.e_;
}

std::string CurveClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  append_terms(out, first, l_, 1, "l", ctx_.a() > 2);
  append_terms(out, first, e_, 1, "e", true);
  if (first) out << '0';
  return out.str();
}

Integer pairing(const DivisorClass& lhs, const DivisorClass& rhs) {
  require_same(lhs.ctx(), rhs.ctx());
  const int c = lhs.ctx().c();
  const auto& h1 = lhs.h();
  const auto& h2 = rhs.h();
  // (sum h1_i H_i, sum h2_j H_j) = (c-1) (sum h1)(sum h2) - sum h1_i h2_i
  Integer s1 = std::accumulate(h1.begin(), h1.end(), Integer(0));
  Integer s2 = std::accumulate(h2.begin(), h2.end(), Integer(0));
  Integer value = Integer(c - 1) * s1 * s2;
  for (std::size_t i = 0; i < h1.size(); ++i) value -= h1[i] * h2[i];
  // (-m1_j E_j, -m2_j E_j) = -m1_j m2_j
  for (std::size_t j = 0; j < lhs.m().size(); ++j) value -= lhs.m()[j] * rhs.m()[j];
  return value;
}

Integer intersect(const DivisorClass& d, const CurveClass& g) {
  require_same(d.ctx(), g.ctx());
  Integer value = 0;
  for (std::size_t i = 0; i < d.h().size(); ++i) value += d.h()[i] * g.l()[i];
  // (-m_j E_j).(e_j e_j) = m_j e_j since E_j.e_j = -1
  for (std::size_t j = 0; j < d.m().size(); ++j) value += d.m()[j] * g.e()[j];
  return value;
}

CurveClass dual_curve(const DivisorClass& d) {
  const auto& ctx = d.ctx();
  std::vector<Integer> l(ctx.hyperplanes());
  std::vector<Integer> e(ctx.r());
  for (int i = 1; i <= ctx.hyperplanes(); ++i) l[i - 1] = pairing(DivisorClass::hyperplane(ctx, i), d);
  // intersect(E_j, g) = -e_j must equal (E_j, D)
  for (int j = 1; j <= ctx.r(); ++j) e[j - 1] = -pairing(DivisorClass::exceptional(ctx, j), d);
  return CurveClass(ctx, std::move(l), std::move(e));
}

DivisorClass canonical_class(const LatticeContext& ctx) { return -anticanonical_class(ctx); }

DivisorClass anticanonical_class(const LatticeContext& ctx) {
  return DivisorClass(ctx, std::vector<Integer>(ctx.hyperplanes(), Integer(ctx.c())),
                      std::vector<Integer>(ctx.r(), Integer(ctx.kappa())));
}

Rational degree(const DivisorClass& d) {
  const int kappa = d.ctx().kappa();
  if (kappa == 0) throw PreconditionError("degree undefined: ac - a - c = 0 in context " + d.ctx().to_string());
  Rational value(pairing(d, anticanonical_class(d.ctx())), Integer(kappa));
  value.canonicalize();
  return value;
}

Integer hdeg(const DivisorClass& d) {
  if (d.ctx().a() != 2) throw PreconditionError("hdeg is defined only for a = 2 contexts");
  return d.h()[0];
}

std::size_t DivisorClassHash::operator()(const DivisorClass& d) const {
  return hash_integers(hash_integers(0, d.h()), d.m());
}

std::size_t CurveClassHash::operator()(const CurveClass& g) const {
  return hash_integers(hash_integers(17, g.l()), g.e());
}

}  // namespace coxforge
