#include "coxforge/verify.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "coxforge/blowup.hpp"
#include "coxforge/errors.hpp"
#include "coxforge/nagata.hpp"
#include "coxforge/roots.hpp"
#include "coxforge/sections.hpp"

namespace coxforge {

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

struct Tally {
  std::size_t checks = 0;
  std::size_t ok = 0;
  std::vector<std::string> failures;

  void record(bool holds, const std::string& what) {
    ++checks;
    if (holds) {
      ++ok;
    } else if (failures.size() < kMaxReportedFailures) {
      failures.push_back(what);
    }
  }
};

struct Outcome {
  std::string expected;
  std::string computed;
  std::vector<std::string> failures;
};

Outcome from_tally(const Tally& t, const std::string& unit = "checks") {
  return {std::to_string(t.checks) + " " + unit + " hold", std::to_string(t.ok) + " " + unit + " hold", t.failures};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void for_each_subset(int r, int size, const std::function<void(const std::vector<int>&)>& fn) {
  if (size < 0 || size > r) return;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i + 1;
  while (true) {
    fn(idx);
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == r - size + pos + 1) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Integer> to_integers(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::string ctx_name(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Every m in [0, d]^r in lexicographic order, skipping vectors that dominate a
// vector already known to have h0 = 0.
void for_each_effective(const PointConfig& cfg, int d, const std::function<void(const DivisorClass&)>& fn) {
  const int r = cfg.r();
  std::set<std::vector<int>> empty;
  std::vector<int> m(r, 0);
  while (true) {
    bool dominated = false;
    for (int j = 0; j < r && !dominated; ++j) {
      if (m[j] == 0) continue;
      auto lower = m;
      --lower[j];
      dominated = empty.count(lower) > 0;
    }
    if (dominated) {
      empty.insert(m);
    } else {
      const DivisorClass dc = DivisorClass::from_hm(cfg.lattice(), Integer(d), to_integers(m));
      if (h0(dc, cfg) == 0) {
        empty.insert(m);
      } else {
        fn(dc);
      }
    }
    int pos = r - 1;
    while (pos >= 0 && m[pos] == d) m[pos--] = 0;
    if (pos < 0) return;
    ++m[pos];
  }
}

Outcome criterion_orbits(Profile) {
  struct Case {
    int a, b, c;
    std::size_t count;
  };
  const std::vector<Case> cases = {{2, 2, 3, 16}, {2, 2, 4, 32}, {2, 2, 5, 64}, {2, 3, 3, 27}, {3, 1, 4, 35}};
  Outcome out;
  for (const auto& cs : cases) {
    const auto start = std::chrono::steady_clock::now();
    const LatticeContext ctx(cs.a, cs.b, cs.c);
    const std::size_t size = weyl_orbit(DivisorClass::exceptional(ctx, ctx.r()), simple_roots(ctx)).size();
    const double secs = seconds_since(start);
    out.expected += ctx_name(cs.a, cs.b, cs.c) + ":" + std::to_string(cs.count) + " ";
    out.computed += ctx_name(cs.a, cs.b, cs.c) + ":" + std::to_string(size) + " ";
    if (secs > 10) out.failures.push_back(ctx_name(cs.a, cs.b, cs.c) + " took " + std::to_string(secs) + " s");
  }
  return out;
}

Outcome criterion_minuscule(Profile) {
  std::vector<std::tuple<int, int, int, bool>> cases;
  for (int n = 2; n <= 5; ++n) cases.emplace_back(2, 2, n + 1, true);
  for (int s = 1; s <= 3; ++s) {
    for (int n = 1; n <= 3; ++n) {
      if (s == 1 && n == 1) continue;  // (2,1,2) is not a valid context
      cases.emplace_back(s + 1, 1, n + 1, true);
    }
  }
  for (int s = 4; s <= 7; ++s) cases.emplace_back(2, s - 3, 3, true);
  cases.emplace_back(2, 3, 4, false);
  cases.emplace_back(2, 3, 5, false);
  Outcome out;
  for (const auto& [a, b, c, expected] : cases) {
    const bool got = is_minuscule(LatticeContext(a, b, c));
    out.expected += ctx_name(a, b, c) + (expected ? ":T " : ":F ");
    out.computed += ctx_name(a, b, c) + (got ? ":T " : ":F ");
  }
  return out;
}

Outcome criterion_minimal_counts(Profile) {
  Outcome out;
  for (int n = 2; n <= 4; ++n) {
    const int r = n + 3;
    Integer expected = 0;
    for (int k = 1; 2 * k <= n + 2; ++k) expected += binomial(r, n + 2 - 2 * k);
    const std::size_t got = enumerate_minimal(BlowupContext(n, r)).size();
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(r) + ")";
    out.expected += tag + ":" + expected.get_str() + "+" + std::to_string(r) + "=" + std::to_string(1 << (n + 2)) + " ";
    out.computed += tag + ":" + std::to_string(got) + "+" + std::to_string(r) + "=" + std::to_string(got + r) + " ";
  }
  return out;
}

Outcome criterion_h0(Profile profile) {
  const int max_n = profile == Profile::Quick ? 3 : 4;
  const int max_r = profile == Profile::Quick ? 7 : 8;
  Tally t;
  for (int n = 2; n <= max_n; ++n) {
    for (int r = n + 3; r <= max_r; ++r) {
      const PointConfig cfg = PointConfig::standard(n, r);
      for (const auto& e : enumerate_minimal(cfg.blowup())) {
        t.record(h0(e, cfg) == 1, "h0(" + e.to_string() + ") != 1");
        for (int i = 1; i <= r; ++i) {
          const DivisorClass shifted = e - DivisorClass::exceptional(cfg.lattice(), i);
          t.record(h0(shifted, cfg) == 0, "h0(" + shifted.to_string() + ") != 0");
        }
      }
    }
  }
  // Cones: D = kH - k sum_I E - (k-1) sum_{I^c} E with |I| = n + 1 - 2k, r >= n + 4.
  for (int n = 2; n <= max_n; ++n) {
    for (int r = n + 4; r <= max_r; ++r) {
      const PointConfig cfg = PointConfig::standard(n, r);
      const LatticeContext ctx = cfg.lattice();
      for (int k = 1; n + 1 - 2 * k >= 0; ++k) {
        for_each_subset(r, n + 1 - 2 * k, [&](const std::vector<int>& support) {
          std::vector<Integer> m(r, Integer(k - 1));
          for (int i : support) m[i - 1] = k;
          const DivisorClass d = DivisorClass::from_hm(ctx, Integer(k), m);
          const FormSpace space = form_space(d, cfg);
          t.record(space.kernel.size() == static_cast<std::size_t>(k + 1), "h0(" + d.to_string() + ") != k+1");
          std::vector<int> outside;
          for (int i = 1; i <= r; ++i) {
            if (m[i - 1] == k - 1) outside.push_back(i);
          }
          const std::vector<std::vector<int>> choices = {
              std::vector<int>(outside.begin(), outside.begin() + (k + 1)),
              std::vector<int>(outside.end() - (k + 1), outside.end())};
          for (const auto& choice : choices) {
            IncrementalSpan kernel(space.monomials.size());
            for (const auto& v : space.kernel) kernel.add(v);
            IncrementalSpan span(space.monomials.size());
            bool inside = true;
            for (int i : choice) {
              const DivisorClass sub = d - DivisorClass::exceptional(ctx, i);
              const RationalVector v = vector_from_form(section_of(sub, cfg), space.monomials);
              inside = inside && kernel.contains(v);
              span.add(v);
            }
            t.record(inside && span.rank() == static_cast<std::size_t>(k + 1),
                     "sub-sections fail to span H0(" + d.to_string() + ")");
          }
        });
      }
    }
  }
  return from_tally(t);
}

Outcome criterion_multiplicities(Profile profile) {
  const int max_r = profile == Profile::Quick ? 7 : 8;
  Tally t;
  for (int n = 2; n <= 3; ++n) {
    for (int r = n + 3; r <= std::min(n + 5, max_r); ++r) {
      const PointConfig cfg = PointConfig::standard(n, r);
      for (const auto& e : enumerate_minimal(cfg.blowup())) {
        const int k = static_cast<int>(e.h()[0].get_si());
        const MultiPoly f = section_of(e, cfg);
        for (int i = 1; i <= r; ++i) {
          const int want = e.m(i) == k ? k : k - 1;
          const int got = mult_at_point(f, cfg.point(i));
          t.record(got == want, "mult at p" + std::to_string(i) + " of " + e.to_string());
          t.record(initial_form_at_point(f, cfg.point(i)).total_degree() == got,
                   "initial form degree at p" + std::to_string(i) + " of " + e.to_string());
        }
        t.record(mult_along_curve(f, cfg) == k - 1, "mult along C of " + e.to_string());
      }
    }
  }
  std::mt19937_64 rng(20240501);
  std::size_t sampled = 0;
  for (std::size_t attempt = 0; sampled < 100 && attempt < 100000; ++attempt) {
    const int n = std::uniform_int_distribution<int>(2, 3)(rng);
    const int r = std::uniform_int_distribution<int>(n + 3, std::min(n + 5, max_r))(rng);
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Integer> m;
    for (int i = 0; i < r; ++i) m.emplace_back(std::uniform_int_distribution<int>(0, d)(rng));
    const PointConfig cfg = PointConfig::standard(n, r);
    const DivisorClass dc = DivisorClass::from_hm(cfg.lattice(), Integer(d), m);
    const FormSpace space = form_space(dc, cfg);
    if (space.kernel.empty()) continue;
    ++sampled;
    RationalVector combo(space.monomials.size());
    for (const auto& v : space.kernel) {
      const int weight = std::uniform_int_distribution<int>(1, 9)(rng);
      for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += weight * v[j];
    }
    const MultiPoly f = form_from_vector(space.monomials, combo, cfg.variables());
    const Integer bound = mult_lower_bound(dc, cfg.blowup());
    t.record(!f.is_zero() && Integer(mult_along_curve(f, cfg)) >= bound, "mult along C below bound for " + dc.to_string());
  }
  t.record(sampled == 100, "only " + std::to_string(sampled) + " effective samples found");
  return from_tally(t);
}

bool valid_decomposition(const DivisorClass& d, const std::vector<DivisorClass>& parts, const BlowupContext& bc) {
  if (Integer(static_cast<long>(parts.size())) != d.h()[0]) return false;
  DivisorClass sum = DivisorClass::zero(d.ctx());
  for (const auto& p : parts) {
    if (p.h()[0] != 1) return false;
    int removed = 0;
    for (const auto& mi : p.m()) {
      if (mi != 0 && mi != 1) return false;  // distinct entries per column
      removed += static_cast<int>(mi.get_si());
    }
    if (removed > bc.n()) return false;
    sum = sum + p;
  }
  return sum == d;
}

Outcome criterion_decompose(Profile) {
  Tally t;
  const BlowupContext example(3, 6);
  const LatticeContext ctx = example.lattice();
  const DivisorClass d = DivisorClass::from_hm(ctx, Integer(5), {3, 3, 2, 5, 1, 0});
  auto part = [&](std::vector<int> idx) {
    std::vector<Integer> m(example.r(), Integer(0));
    for (int i : idx) m[i - 1] = 1;
    return DivisorClass::from_hm(ctx, Integer(1), m);
  };
  const std::vector<DivisorClass> expected = {part({1, 2, 4}), part({1, 3, 4}), part({1, 3, 4}), part({2, 4, 5}),
                                              part({2, 4})};
  const auto got = effective_decompose(d, example);
  t.record(got == expected, "worked example table mismatch");
  t.record(valid_decomposition(d, got, example), "worked example does not re-sum");

  std::mt19937_64 rng(6);
  for (int sample = 0; sample < 500; ++sample) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const int r = std::uniform_int_distribution<int>(n + 3, n + 6)(rng);
    const int dd = std::uniform_int_distribution<int>(0, 8)(rng);
    const BlowupContext rb(n, r);
    std::vector<Integer> m(r, Integer(0));
    int budget = n * dd;
    for (int i = 0; i < r; ++i) {
      const int mi = std::min(budget, std::uniform_int_distribution<int>(0, dd)(rng));
      m[i] = mi;
      budget -= mi;
    }
    const DivisorClass dc = DivisorClass::from_hm(rb.lattice(), Integer(dd), m);
    bool ok = false;
    try {
      ok = valid_decomposition(dc, effective_decompose(dc, rb), rb);
    } catch (const Error&) {
      ok = false;
    }
    t.record(ok, "decomposition of " + dc.to_string());
  }
  return from_tally(t);
}

Outcome criterion_invariance(Profile profile) {
  const int max_n = profile == Profile::Quick ? 3 : 5;
  Tally t;
  for (int n = 2; n <= max_n; ++n) {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const NagataParams np = NagataParams::random(n + 3, seed);
      for (const auto& idx : odd_subsets(n + 3)) {
        t.record(is_invariant(build_F(idx, np), np),
                 "F_I not invariant, n=" + std::to_string(n) + " seed=" + std::to_string(seed));
      }
    }
  }
  return from_tally(t, "identities");
}

Outcome criterion_correspondence(Profile profile) {
  const int max_n = profile == Profile::Quick ? 3 : 5;
  Tally t;
  for (int n = 2; n <= max_n; ++n) {
    const int r = n + 3;
    const NagataParams np = NagataParams::standard(r);
    const LatticeContext ctx = LatticeContext::blowup(n, r);
    for (const auto& cols : odd_subsets(r)) {
      const int k = (static_cast<int>(cols.size()) - 1) / 2;
      std::vector<Integer> m(r, Integer(k));
      for (int i : cols) m[i - 1] = k - 1;
      const DivisorClass expected = DivisorClass::from_hm(ctx, Integer(k), m);
      const MultiPoly f = build_F(cols, np);
      const TorusWeight tw = torus_weight(f, np);
      const DivisorClass got = divisor_class_of(f, np, n);
      t.record(got == expected, "class of F_I, |I|=" + std::to_string(cols.size()) + ": " + got.to_string());
      t.record(degree(got) == 1 && tw.deg_x - tw.deg_y == 1, "degree of " + got.to_string());
    }
  }
  return from_tally(t);
}

Outcome criterion_generation(Profile profile) {
  const int d2 = profile == Profile::Quick ? 3 : 4;
  const int d3 = profile == Profile::Quick ? 2 : 3;
  std::vector<std::tuple<int, int, int>> configs = {{2, 5, d2}, {2, 6, d2}, {2, 7, d2}, {3, 6, d3}, {3, 7, d3}};
  Tally t;
  for (const auto& [n, r, dmax] : configs) {
    const PointConfig cfg = PointConfig::standard(n, r);
    const GenerationTester tester(cfg);
    for (int d = 1; d <= dmax; ++d) {
      for_each_effective(cfg, d, [&](const DivisorClass& dc) {
        const GenerationReport rep = tester.test(dc);
        t.record(rep.generated && rep.span_dim == rep.h0,
                 dc.to_string() + ": span " + std::to_string(rep.span_dim) + " < h0 " + std::to_string(rep.h0));
      });
    }
  }
  return from_tally(t, "classes generated");
}

Outcome criterion_anticanonical(Profile) {
  const std::vector<std::tuple<int, int, int>> cases = {{2, 3, 3}, {2, 2, 3}, {2, 2, 4}, {2, 3, 4},
                                                        {2, 3, 5}, {3, 1, 4}, {3, 2, 3}, {2, 4, 3}};
  Outcome out;
  for (const auto& [a, b, c] : cases) {
    Rational formula = Rational(a * b * c) * (Rational(1, a) + Rational(1, b) + Rational(1, c) - 1);
    formula.canonicalize();
    const Rational got = degree(anticanonical_class(LatticeContext(a, b, c)));
    out.expected += ctx_name(a, b, c) + ":" + format_rational(formula) + " ";
    out.computed += ctx_name(a, b, c) + ":" + format_rational(got) + " ";
  }
  return out;
}

Outcome criterion_cone(Profile) {
  Tally t;
  std::mt19937_64 rng(11);
  for (int n : {2, 3}) {
    const PointConfig cfg = PointConfig::standard(n, n + 3);
    const LatticeContext ctx = cfg.lattice();
    const RootSystemData rs = simple_roots(ctx);
    for (int sample = 0; sample < 200; ++sample) {
      const int d = std::uniform_int_distribution<int>(0, 4)(rng);
      std::vector<Integer> m;
      for (int i = 0; i < ctx.r(); ++i) m.emplace_back(std::uniform_int_distribution<int>(-1, d)(rng));
      const DivisorClass dc = DivisorClass::from_hm(ctx, Integer(d), m);
      const bool member = eff_membership(dc).member;
      if (h0(dc, cfg) > 0) t.record(member, "effective but outside the cone: " + dc.to_string());
      for (const auto& alpha : rs.simple_roots) {
        t.record(eff_membership(reflect(alpha, dc)).member == member, "reflection changes verdict: " + dc.to_string());
      }
    }
  }
  return from_tally(t);
}

struct Criterion {
  const char* title;
  double limit_seconds;
  Outcome (*run)(Profile);
};

const Criterion kCriteria[kCriterionCount] = {
    {"Weyl orbit sizes of E_r", 50, criterion_orbits},
    {"minuscule classification", 60, criterion_minuscule},
    {"minimal-divisor counts", 1, criterion_minimal_counts},
    {"h0 of minimal divisors and cones", 120, criterion_h0},
    {"multiplicities at points and along C", 120, criterion_multiplicities},
    {"effective decomposition", 10, criterion_decompose},
    {"Nagata invariance of F_I", 180, criterion_invariance},
    {"torus-weight class correspondence", 60, criterion_correspondence},
    {"generation by minimal sections", 900, criterion_generation},
    {"anticanonical degree", 1, criterion_anticanonical},
    {"effective-cone coherence", 300, criterion_cone},
};

}  // namespace

Profile parse_profile(const std::string& text) {
  if (text == "quick") return Profile::Quick;
  if (text == "full") return Profile::Full;
  throw PreconditionError("profile must be quick or full, got '" + text + "'");
}

std::string to_string(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

CheckResult run_criterion(int id, Profile profile) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("criterion id must be 1.." + std::to_string(kCriterionCount));
  const Criterion& c = kCriteria[id - 1];
  CheckResult res;
  res.id = id;
  res.title = c.title;
  res.limit_seconds = c.limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome out = c.run(profile);
    res.expected = std::move(out.expected);
    res.computed = std::move(out.computed);
    res.failures = std::move(out.failures);
  } catch (const std::exception& ex) {
    res.computed = std::string("error: ") + ex.what();
  }
  res.seconds = seconds_since(start);
  res.values_match = !res.expected.empty() && res.expected == res.computed && res.failures.empty();
  res.pass = res.values_match && res.seconds <= res.limit_seconds;
  return res;
}

std::vector<CheckResult> verify_all(Profile profile, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, profile));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace coxforge
