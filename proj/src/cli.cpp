#include "coxforge/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "coxforge/blowup.hpp"
#include "coxforge/errors.hpp"
#include "coxforge/nagata.hpp"
#include "coxforge/roots.hpp"
#include "coxforge/sections.hpp"
#include "coxforge/serialize.hpp"
#include "coxforge/verify.hpp"

namespace coxforge {

namespace {

struct RunConfig {
  std::string verb;
  std::string action;  // invariant build|check|class
  std::vector<std::string> positional;
  std::string ctx;
  std::string class_json;
  std::optional<int> n;
  std::optional<int> r;
  std::optional<std::string> d;
  std::vector<std::string> h;
  std::vector<std::string> m;
  std::string params;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::optional<std::size_t> cap;
  std::string profile = "quick";
  std::vector<int> indices;
  std::string poly_json;
  bool all = false;
  bool j_invariants = false;
  bool degree_one = false;
};

struct Output {
  Json data;
  std::string table;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw PreconditionError(std::string(what) + " must be a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

Integer parse_integer(const std::string& text) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) throw PreconditionError("not an integer: '" + text + "'");
  return z;
}

std::size_t cap_of(const RunConfig& cfg, std::size_t fallback) { return cfg.cap ? *cfg.cap : cap_from_env(fallback); }

LatticeContext context_of(const RunConfig& cfg) {
  if (!cfg.ctx.empty()) {
    const auto abc = parse_int_list(cfg.ctx, "--ctx");
    if (abc.size() != 3) throw PreconditionError("--ctx needs three integers a,b,c");
    return LatticeContext(abc[0], abc[1], abc[2]);
  }
  if (cfg.n) {
    if (!cfg.r) throw PreconditionError("a blow-up context needs both --n and --r");
    return LatticeContext::blowup(*cfg.n, *cfg.r);
  }
  throw PreconditionError("missing context: give --ctx a,b,c or --n N --r R");
}

DivisorClass divisor_of(const RunConfig& cfg) {
  if (!cfg.class_json.empty()) {
    try {
      return divisor_from_json(Json::parse(cfg.class_json));
    } catch (const Json::exception& ex) {
      throw PreconditionError(std::string("--class is not valid JSON: ") + ex.what());
    }
  }
  std::vector<Integer> m;
  for (const auto& s : cfg.m) m.push_back(parse_integer(s));
  if (cfg.ctx.empty() && cfg.n) {
    // Blow-up of P^n: r defaults to max(|m|, n + 3); missing m_i are zero.
    const int r = cfg.r ? *cfg.r : std::max(static_cast<int>(m.size()), *cfg.n + 3);
    if (static_cast<int>(m.size()) > r) throw PreconditionError("--m has more entries than --r");
    m.resize(r, Integer(0));
    if (!cfg.d) throw PreconditionError("missing --d");
    return DivisorClass::from_hm(LatticeContext::blowup(*cfg.n, r), parse_integer(*cfg.d), m);
  }
  const LatticeContext ctx = context_of(cfg);
  std::vector<Integer> h;
  if (!cfg.h.empty()) {
    for (const auto& s : cfg.h) h.push_back(parse_integer(s));
  } else if (cfg.d && ctx.a() == 2) {
    h.push_back(parse_integer(*cfg.d));
  } else {
    throw PreconditionError("missing class coefficients: give --h (or --d when a = 2)");
  }
  if (static_cast<int>(m.size()) > ctx.r()) throw PreconditionError("--m has more entries than points");
  m.resize(ctx.r(), Integer(0));
  return DivisorClass(ctx, std::move(h), std::move(m));
}

BlowupContext blowup_of(const DivisorClass& d) {
  const LatticeContext& ctx = d.ctx();
  if (ctx.a() != 2) throw PreconditionError("this verb needs a blow-up of P^n (a = 2)");
  return BlowupContext(ctx.c() - 1, ctx.r());
}

PointConfig points_of(const RunConfig& cfg, const BlowupContext& bc) {
  if (!cfg.params.empty()) {
    if (cfg.params.front() == '{') {
      PointConfig pc = point_config_from_json(Json::parse(cfg.params));
      if (pc.n() != bc.n() || pc.r() != bc.r()) throw PreconditionError("--params config does not match the class");
      return pc;
    }
    std::vector<Rational> values;
    std::stringstream ss(cfg.params);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
    if (static_cast<int>(values.size()) != bc.r()) {
      throw PreconditionError("--params needs exactly r = " + std::to_string(bc.r()) + " values");
    }
    return PointConfig(bc.n(), bc.r(), std::move(values));
  }
  if (cfg.seed) return PointConfig::random(bc.n(), bc.r(), *cfg.seed);
  return PointConfig::standard(bc.n(), bc.r());
}

NagataParams nagata_of(const RunConfig& cfg) {
  if (!cfg.n) throw PreconditionError("missing --n (the action lives on n + 3 pairs of variables)");
  const int r = *cfg.n + 3;
  if (!cfg.params.empty()) {
    std::vector<Rational> values;
    std::stringstream ss(cfg.params);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
    if (static_cast<int>(values.size()) != r) throw PreconditionError("--params needs exactly n + 3 values");
    return NagataParams(std::move(values));
  }
  if (cfg.seed) return NagataParams::random(r, *cfg.seed);
  return NagataParams::standard(r);
}

std::string lines_of(const std::vector<DivisorClass>& ds) {
  std::string out;
  for (const auto& d : ds) out += d.to_string() + "\n";
  return out;
}

Output verb_classify(const RunConfig& cfg) {
  const LatticeContext ctx = context_of(cfg);
  const bool finite = is_finite_type(ctx.a(), ctx.b(), ctx.c());
  Json data = {{"ctx", context_to_json(ctx)},
               {"finite_type", finite},
               {"dynkin", dynkin_label(ctx.a(), ctx.b(), ctx.c()).to_string()},
               {"rank", ctx.rank()},
               {"kappa", ctx.kappa()},
               {"K", divisor_to_json(canonical_class(ctx))},
               {"anticanonical", divisor_to_json(anticanonical_class(ctx))},
               {"KK", integer_to_json(pairing(canonical_class(ctx), canonical_class(ctx)))}};
  std::string table = "context " + ctx.to_string() + "\n";
  table += std::string("type ") + data["dynkin"].get<std::string>() + (finite ? " (finite)" : "") + "\n";
  table += "-K = " + anticanonical_class(ctx).to_string() + "\n";
  if (ctx.kappa() != 0) {
    const Rational deg = degree(anticanonical_class(ctx));
    data["degree_anticanonical"] = rational_to_json(deg);
    table += "deg(-K) = " + format_rational(deg) + "\n";
  }
  return {data, table};
}

Output verb_roots(const RunConfig& cfg) {
  const RootSystemData rs = simple_roots(context_of(cfg));
  std::string table;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    table += "alpha" + std::to_string(i + 1) + " = " + rs.simple_roots[i].to_string() + "\n";
  }
  return {divisors_to_json(rs.simple_roots), table};
}

Output verb_orbit(const RunConfig& cfg) {
  const bool explicit_class = !cfg.class_json.empty() || !cfg.m.empty() || !cfg.h.empty();
  const LatticeContext ctx = explicit_class ? divisor_of(cfg).ctx() : context_of(cfg);
  const DivisorClass start = explicit_class ? divisor_of(cfg) : DivisorClass::exceptional(ctx, ctx.r());
  const auto orbit = weyl_orbit(start, simple_roots(start.ctx()), cap_of(cfg, kDefaultOrbitCap));
  return {divisors_to_json(orbit), lines_of(orbit)};
}

Output verb_degree_one(const RunConfig& cfg) {
  const auto ds = degree_one_divisors(context_of(cfg));
  return {divisors_to_json(ds), lines_of(ds)};
}

Output verb_minuscule(const RunConfig& cfg) {
  const LatticeContext ctx = context_of(cfg);
  const RootSystemData rs = simple_roots(ctx);
  const std::size_t cap = cap_of(cfg, kDefaultOrbitCap);
  const Weight top = exceptional_weight(rs);
  const std::size_t orbit = weyl_orbit(top, rs.cartan(), cap).size();
  const std::size_t weights = weights_of_irrep(top, rs, cap).size();
  const bool minuscule = orbit == weights;
  Json data = {{"ctx", context_to_json(ctx)}, {"minuscule", minuscule}, {"orbit_size", orbit}, {"weight_count", weights}};
  std::string table = ctx.to_string() + (minuscule ? " minuscule" : " not minuscule") + " (orbit " +
                      std::to_string(orbit) + ", weights " + std::to_string(weights) + ")\n";
  return {data, table};
}

Output verb_minimal(const RunConfig& cfg) {
  int n = 0;
  int r = 0;
  if (cfg.positional.size() == 2) {
    n = parse_int_list(cfg.positional[0], "n").at(0);
    r = parse_int_list(cfg.positional[1], "r").at(0);
  } else if (cfg.n && cfg.r) {
    n = *cfg.n;
    r = *cfg.r;
  } else {
    throw PreconditionError("minimal needs n and r (positional or --n/--r)");
  }
  const auto ds = enumerate_minimal(BlowupContext(n, r));
  return {divisors_to_json(ds), lines_of(ds)};
}

Output verb_project(const RunConfig& cfg) {
  const DivisorClass d = divisor_of(cfg);
  const BlowupContext bc = blowup_of(d);
  const DivisorClass target = project_class(d, bc);
  Json data = {{"class", divisor_to_json(d)}, {"projection", divisor_to_json(target)}, {"classification", nullptr}};
  std::string table = d.to_string() + " -> " + target.to_string() + "\n";
  if (minimal_shape(d, bc)) {
    const ProjectionResult pr = classify_minimal_projection(d, bc);
    Json cls = {{"case", to_string(pr.tag)},
                {"target", divisor_to_json(pr.target)},
                {"e_q_coefficient", pr.e_q_coefficient},
                {"lifted", pr.lifted ? divisor_to_json(*pr.lifted) : Json(nullptr)}};
    data["classification"] = cls;
    table += "case " + to_string(pr.tag) + ", target " + pr.target.to_string();
    if (pr.lifted) table += ", lifted " + pr.lifted->to_string();
    table += "\n";
  }
  return {data, table};
}

Output verb_decompose(const RunConfig& cfg) {
  const DivisorClass d = divisor_of(cfg);
  if (cfg.degree_one) {
    const auto parts = decompose_degree1(d, cap_of(cfg, kDefaultSearchBudget));
    if (!parts) return {Json(nullptr), "none\n"};
    return {divisors_to_json(*parts), lines_of(*parts)};
  }
  const auto parts = effective_decompose(d, blowup_of(d));
  return {divisors_to_json(parts), lines_of(parts)};
}

Output verb_member(const RunConfig& cfg) {
  const DivisorClass d = divisor_of(cfg);
  const MembershipResult res = eff_membership(d, cap_of(cfg, kDefaultOrbitCap));
  Json data = {{"class", divisor_to_json(d)},
               {"member", res.member},
               {"certificate", res.certificate ? curve_to_json(*res.certificate) : Json(nullptr)}};
  std::string table = d.to_string() + (res.member ? " is in the effective cone\n" : " is outside the effective cone");
  if (res.certificate) table += " (pairs negatively with " + res.certificate->to_string() + ")\n";
  return {data, table};
}

Output verb_h0(const RunConfig& cfg) {
  const DivisorClass d = divisor_of(cfg);
  const PointConfig pc = points_of(cfg, blowup_of(d));
  const std::size_t value = h0(d, pc);
  return {{{"class", divisor_to_json(d)}, {"points", point_config_to_json(pc)}, {"h0", value}},
          "h0(" + d.to_string() + ") = " + std::to_string(value) + "\n"};
}

Output verb_section(const RunConfig& cfg) {
  const DivisorClass d = divisor_of(cfg);
  const PointConfig pc = points_of(cfg, blowup_of(d));
  const MultiPoly f = section_of(d, pc);
  return {{{"class", divisor_to_json(d)}, {"points", point_config_to_json(pc)}, {"section", poly_to_json(f)}},
          f.to_string() + "\n"};
}

Output verb_mult(const RunConfig& cfg) {
  const DivisorClass d = divisor_of(cfg);
  const BlowupContext bc = blowup_of(d);
  const PointConfig pc = points_of(cfg, bc);
  const FormSpace space = form_space(d, pc);
  if (space.kernel.empty()) throw PreconditionError("mult needs an effective class (h0 = 0 for " + d.to_string() + ")");
  // The sum of the kernel basis with weights 1, 2, ... stands in for a general member.
  RationalVector combo(space.monomials.size());
  for (std::size_t b = 0; b < space.kernel.size(); ++b) {
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += Rational(static_cast<long>(b + 1)) * space.kernel[b][j];
  }
  const MultiPoly f = form_from_vector(space.monomials, combo, pc.variables());
  Json at = Json::array();
  std::string table;
  for (int i = 1; i <= pc.r(); ++i) {
    const int mi = mult_at_point(f, pc.point(i));
    at.push_back(mi);
    table += "p" + std::to_string(i) + ": " + std::to_string(mi) + "\n";
  }
  const int along = mult_along_curve(f, pc);
  const Integer bound = mult_lower_bound(d, bc);
  table += "along C: " + std::to_string(along) + " (lower bound " + bound.get_str() + ")\n";
  return {{{"class", divisor_to_json(d)},
           {"points", point_config_to_json(pc)},
           {"form", poly_to_json(f)},
           {"at_points", at},
           {"along_curve", along},
           {"lower_bound", integer_to_json(bound)}},
          table};
}

Output verb_check_generation(const RunConfig& cfg) {
  const DivisorClass d = divisor_of(cfg);
  const PointConfig pc = points_of(cfg, blowup_of(d));
  GenerationCaps caps;
  if (cfg.cap || std::getenv("COXFORGE_CAP")) caps.max_nodes = cap_of(cfg, caps.max_nodes);
  const GenerationReport rep = generation_test(d, pc, caps);
  Json data = {{"class", divisor_to_json(d)},
               {"points", point_config_to_json(pc)},
               {"h0", rep.h0},
               {"span_dim", rep.span_dim},
               {"generated", rep.generated},
               {"products", rep.products}};
  std::string table = d.to_string() + ": h0 " + std::to_string(rep.h0) + ", span " + std::to_string(rep.span_dim) +
                      (rep.generated ? ", generated\n" : ", NOT generated\n");
  return {data, table};
}

std::vector<std::vector<int>> index_sets(const RunConfig& cfg, const NagataParams& np) {
  if (cfg.all) return odd_subsets(np.r());
  if (cfg.indices.empty()) throw PreconditionError("give -I i,j,k or --all");
  return {cfg.indices};
}

Json indices_json(const std::vector<int>& idx) { return Json(idx); }

Output verb_invariant(const RunConfig& cfg) {
  const NagataParams np = nagata_of(cfg);
  const int n = *cfg.n;
  if (cfg.action == "build") {
    Json arr = Json::array();
    std::string table;
    if (cfg.j_invariants) {
      for (const auto& j : build_J(np, n)) {
        arr.push_back({{"J", poly_to_json(j)}});
        table += j.to_string() + "\n";
      }
    } else {
      for (const auto& idx : index_sets(cfg, np)) {
        const MultiPoly f = build_F(idx, np);
        arr.push_back({{"I", indices_json(idx)}, {"poly", poly_to_json(f)}});
        table += f.to_string() + "\n";
      }
    }
    return {arr, table};
  }
  if (cfg.action == "check") {
    std::vector<MultiPoly> polys;
    if (!cfg.poly_json.empty()) {
      polys.push_back(poly_from_json(Json::parse(cfg.poly_json), np.variables()));
    } else if (cfg.j_invariants) {
      polys = build_J(np, n);
    } else {
      for (const auto& idx : index_sets(cfg, np)) polys.push_back(build_F(idx, np));
    }
    std::size_t ok = 0;
    for (const auto& p : polys) ok += is_invariant(p, np) ? 1 : 0;
    std::string summary;
    if (cfg.all && !cfg.j_invariants && cfg.poly_json.empty() && ok == polys.size()) {
      summary = "2^" + std::to_string(n + 2) + " = " + std::to_string(polys.size()) + " invariants verified";
    } else {
      summary = std::to_string(ok) + " of " + std::to_string(polys.size()) + " polynomials invariant";
    }
    return {{{"checked", polys.size()}, {"invariant", ok}, {"all_invariant", ok == polys.size()}, {"summary", summary}},
            summary + "\n"};
  }
  if (cfg.action == "class") {
    Json arr = Json::array();
    std::string table;
    for (const auto& idx : index_sets(cfg, np)) {
      const MultiPoly f = build_F(idx, np);
      const TorusWeight tw = torus_weight(f, np);
      const DivisorClass d = divisor_class_of(f, np, n);
      arr.push_back({{"I", indices_json(idx)},
                     {"class", divisor_to_json(d)},
                     {"torus_weight", {{"w", tw.w}, {"deg_x", tw.deg_x}, {"deg_y", tw.deg_y}}},
                     {"degree", rational_to_json(degree(d))}});
      table += "F_{";
      for (std::size_t i = 0; i < idx.size(); ++i) table += (i ? "," : "") + std::to_string(idx[i]);
      table += "} -> " + d.to_string() + "\n";
    }
    return {arr, table};
  }
  throw PreconditionError("invariant needs one of build, check, class");
}

Output verb_verify(const RunConfig& cfg) {
  const Profile profile = parse_profile(cfg.profile);
  Json checks = Json::array();
  std::string table;
  bool all_pass = true;
  for (const auto& res : verify_all(profile)) {
    all_pass = all_pass && res.pass;
    checks.push_back({{"id", res.id},
                      {"title", res.title},
                      {"expected", res.expected},
                      {"computed", res.computed},
                      {"pass", res.pass},
                      {"failures", res.failures}});
    table += std::string(res.pass ? "PASS " : "FAIL ") + std::to_string(res.id) + " " + res.title + ": expected " +
             res.expected + "; computed " + res.computed + "\n";
  }
  return {{{"profile", to_string(profile)}, {"checks", checks}, {"all_pass", all_pass}}, table};
}

using Handler = std::function<Output(const RunConfig&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"classify", verb_classify},     {"roots", verb_roots},
      {"orbit", verb_orbit},           {"degree-one", verb_degree_one},
      {"minuscule", verb_minuscule},   {"minimal", verb_minimal},
      {"project", verb_project},       {"decompose", verb_decompose},
      {"member", verb_member},         {"h0", verb_h0},
      {"section", verb_section},       {"mult", verb_mult},
      {"check-generation", verb_check_generation}, {"invariant", verb_invariant},
      {"verify", verb_verify},
  };
  return table;
}

void add_options(CLI::App& app, RunConfig& cfg) {
  app.set_help_flag("--help", "print this help");
  app.add_option("positional", cfg.positional, "positional arguments");
  app.add_option("--ctx", cfg.ctx, "lattice context a,b,c");
  app.add_option("--class", cfg.class_json, "divisor class as JSON");
  app.add_option("--n", cfg.n, "dimension of the projective space");
  app.add_option("--r", cfg.r, "number of points");
  app.add_option("--d", cfg.d, "H coefficient (a = 2)");
  app.add_option("--h", cfg.h, "H coefficients")->delimiter(',');
  app.add_option("--m", cfg.m, "multiplicities m_1,...,m_r")->delimiter(',');
  app.add_option("--params", cfg.params, "point parameters p/q,... or a point-config JSON");
  app.add_option("--seed", cfg.seed, "seed for random parameters");
  app.add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cap", cfg.cap, "search/enumeration cap");
  app.add_option("--profile", cfg.profile, "verify profile: quick or full");
  app.add_option("-I", cfg.indices, "index set for F_I")->delimiter(',');
  app.add_option("--poly", cfg.poly_json, "polynomial term list JSON");
  app.add_flag("--all", cfg.all, "all odd index sets");
  app.add_flag("--J", cfg.j_invariants, "use the J invariants");
  app.add_flag("--degree-one", cfg.degree_one, "decompose into degree-one classes");
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

std::string usage() {
  return "usage: coxforge <verb> [options]\n"
         "verbs: classify roots orbit degree-one minuscule minimal project decompose member\n"
         "       h0 section mult check-generation invariant {build|check|class} verify\n"
         "common options: --ctx a,b,c | --n N --r R, --d D --m m1,...,mr | --class JSON,\n"
         "                --params p/q,... | --seed S, --format json|table, --cap N\n"
         "environment: COXFORGE_CAP overrides default caps\n";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    err << usage();
    return args.empty() ? kExitUsage : kExitOk;
  }
  const auto& table = handlers();
  const auto it = table.find(args[0]);
  if (it == table.end()) {
    err << "unknown verb '" << args[0] << "'\n" << usage();
    return kExitUsage;
  }
  RunConfig cfg;
  cfg.verb = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  if (cfg.verb == "invariant") {
    if (rest.empty() || rest[0].rfind("-", 0) == 0) {
      write_error(err, "precondition", "invariant needs one of build, check, class");
      return kExitPrecondition;
    }
    cfg.action = rest[0];
    rest.erase(rest.begin());
  }
  CLI::App app("coxforge " + cfg.verb);
  add_options(app, cfg);
  try {
    std::vector<std::string> reversed(rest.rbegin(), rest.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    write_error(err, "precondition", ex.what());
    return kExitPrecondition;
  }
  try {
    Output result = it->second(cfg);
    if (cfg.format == "table") {
      out << result.table;
    } else {
      out << result.data.dump(2) << "\n";
    }
    if (cfg.verb == "verify" && !result.data.at("all_pass").get<bool>()) return kExitPrecondition;
    return kExitOk;
  } catch (const CapExceeded& ex) {
    write_error(err, "cap_exceeded", ex.what());
    return kExitCap;
  } catch (const PreconditionError& ex) {
    write_error(err, "precondition", ex.what());
    return kExitPrecondition;
  } catch (const Json::exception& ex) {
    write_error(err, "precondition", std::string("malformed JSON input: ") + ex.what());
    return kExitPrecondition;
  } catch (const Error& ex) {
    write_error(err, "error", ex.what());
    return kExitPrecondition;
  }
}

}  // namespace coxforge
