#include "coxforge/serialize.hpp"

#include "coxforge/errors.hpp"

namespace coxforge {

namespace {

const Integer kMaxExact = Integer(1) << 53;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("JSON is missing field \"") + key + "\"");
  return j.at(key);
}

int small_int(const Json& j, const char* what) {
  const Integer z = integer_from_json(j);
  if (!z.fits_sint_p()) throw PreconditionError(std::string(what) + " out of range");
  return static_cast<int>(z.get_si());
}

std::vector<Integer> integer_list(const Json& j, const char* what) {
  if (!j.is_array()) throw PreconditionError(std::string(what) + " must be an array");
  std::vector<Integer> out;
  for (const auto& item : j) out.push_back(integer_from_json(item));
  return out;
}

Json integer_list_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer_to_json(z));
  return out;
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (abs(z) < kMaxExact) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw PreconditionError("not an integer: " + j.get<std::string>());
    return z;
  }
  throw PreconditionError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return Json(format_rational(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw PreconditionError("expected a rational string \"p/q\", got " + j.dump());
}

Json context_to_json(const LatticeContext& ctx) {
  Json out = {{"a", ctx.a()}, {"b", ctx.b()}, {"c", ctx.c()}};
  if (ctx.a() == 2) {
    out["n"] = ctx.c() - 1;
    out["r"] = ctx.r();
  }
  return out;
}

LatticeContext context_from_json(const Json& j) {
  if (j.is_object() && j.contains("a")) {
    LatticeContext ctx(small_int(field(j, "a"), "a"), small_int(field(j, "b"), "b"), small_int(field(j, "c"), "c"));
    if (j.contains("n") && ctx != LatticeContext::blowup(small_int(j.at("n"), "n"), small_int(field(j, "r"), "r"))) {
      throw PreconditionError("context envelope {n, r} disagrees with {a, b, c}");
    }
    return ctx;
  }
  return LatticeContext::blowup(small_int(field(j, "n"), "n"), small_int(field(j, "r"), "r"));
}

Json divisor_to_json(const DivisorClass& d) {
  return {{"ctx", context_to_json(d.ctx())}, {"h", integer_list_to_json(d.h())}, {"m", integer_list_to_json(d.m())}};
}

DivisorClass divisor_from_json(const Json& j) {
  const LatticeContext ctx = context_from_json(j.contains("ctx") ? j.at("ctx") : j);
  std::vector<Integer> h;
  if (j.contains("h")) {
    h = integer_list(j.at("h"), "h");
  } else if (j.contains("d") && ctx.a() == 2) {
    h = {integer_from_json(j.at("d"))};
  } else {
    throw PreconditionError("divisor JSON needs \"h\" (or \"d\" when a = 2)");
  }
  return DivisorClass(ctx, std::move(h), integer_list(field(j, "m"), "m"));
}

Json divisors_to_json(const std::vector<DivisorClass>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(divisor_to_json(d));
  return out;
}

Json curve_to_json(const CurveClass& g) {
  return {{"ctx", context_to_json(g.ctx())}, {"l", integer_list_to_json(g.l())}, {"e", integer_list_to_json(g.e())}};
}

CurveClass curve_from_json(const Json& j) {
  return CurveClass(context_from_json(field(j, "ctx")), integer_list(field(j, "l"), "l"), integer_list(field(j, "e"), "e"));
}

Json point_config_to_json(const PointConfig& cfg) {
  Json params = Json::array();
  for (const auto& q : cfg.params()) params.push_back(rational_to_json(q));
  return {{"n", cfg.n()}, {"r", cfg.r()}, {"params", params}};
}

PointConfig point_config_from_json(const Json& j) {
  const Json& params = field(j, "params");
  if (!params.is_array()) throw PreconditionError("params must be an array");
  std::vector<Rational> values;
  for (const auto& item : params) values.push_back(rational_from_json(item));
  const int r = j.contains("r") ? small_int(j.at("r"), "r") : static_cast<int>(values.size());
  if (r != static_cast<int>(values.size())) throw PreconditionError("r disagrees with the number of params");
  return PointConfig(small_int(field(j, "n"), "n"), r, std::move(values));
}

Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::object();
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] != 0) exps[p.vars()[v]] = e[v];
    }
    out.push_back({{"coef", rational_to_json(c)}, {"exps", exps}});
  }
  return out;
}

MultiPoly poly_from_json(const Json& j, const std::vector<std::string>& vars) {
  if (!j.is_array()) throw PreconditionError("polynomial JSON must be a term list");
  MultiPoly p(vars);
  for (const auto& term : j) {
    Exponent e(vars.size(), 0);
    for (const auto& [name, power] : field(term, "exps").items()) {
      if (!power.is_number_integer() || power.get<int>() < 0) throw PreconditionError("bad exponent for " + name);
      e[p.var_index(name)] += power.get<int>();
    }
    p.add_term(e, rational_from_json(field(term, "coef")));
  }
  return p;
}

}  // namespace coxforge
