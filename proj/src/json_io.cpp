#include "tdp/json_io.hpp"
#include "tdp/error.hpp"

#include <algorithm>
#include <limits>

namespace tdp {

json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(n));
  }
  return json(n.str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    return parse_integer(j.get<std::string>());
  }
  throw Error(ErrorKind::InvalidInput, "expected an integer, got " + j.dump());
}

json rational_json(const Rational& q) { return {{"num", integer_json(numerator(q))}, {"den", integer_json(denominator(q))}}; }

Rational rational_from_json(const json& j) {
  if (j.is_object()) {
    Integer den = integer_from_json(j.at("den"));
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
    return Rational(integer_from_json(j.at("num")), den);
  }
  return Rational(integer_from_json(j));
}

json germ_json(const CyclicQuotSing& s) { return {{"r", integer_json(s.r())}, {"a", integer_json(s.a())}}; }

CyclicQuotSing germ_from_json(const json& j) {
  return normalize(integer_from_json(j.at("r")), integer_from_json(j.at("a")));
}

json chain_json(const HJChain& chain) {
  json out = json::array();
  for (const auto& b : chain) out.push_back(integer_json(b));
  return out;
}

json singularity_json(const SingularityClass& c) {
  if (const auto* d = std::get_if<DuValD>(&c.variant())) return {{"type", "D"}, {"n", d->n}};
  if (const auto* e = std::get_if<DuValE>(&c.variant())) return {{"type", "E"}, {"n", e->n}};
  if (const auto* s = c.cyclic()) return germ_json(*s);
  return germ_json(CyclicQuotSing::smooth());
}

SingularityClass singularity_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "singularity must be an object");
  if (j.contains("type")) {
    std::string type = j.at("type").get<std::string>();
    int n = j.at("n").get<int>();
    if (type == "D") return SingularityClass(DuValD{n});
    if (type == "E") return SingularityClass(DuValE{n});
    if (type == "A") return SingularityClass::type_a(Integer(n));
    throw Error(ErrorKind::InvalidInput, "unknown singularity type '" + type + "'");
  }
  return SingularityClass(germ_from_json(j));
}

json fan_json(const Fan& f) {
  json rays = json::array();
  for (const auto& v : f.rays()) rays.push_back({integer_json(v.x), integer_json(v.y)});
  return {{"rays", rays}};
}

Fan fan_from_json(const json& j) {
  const json& rays = j.is_object() ? j.at("rays") : j;
  std::vector<LatticeVector> out;
  for (const auto& r : rays) {
    if (!r.is_array() || r.size() != 2) throw Error(ErrorKind::InvalidInput, "ray must be [x, y]");
    out.push_back({integer_from_json(r[0]), integer_from_json(r[1])});
  }
  return fan_from_rays(std::move(out));
}

json surface_report_json(const ToricSurface& s) {
  json sings = json::array();
  for (const auto& c : s.singularities()) sings.push_back(singularity_json(c));
  json out = fan_json(s.fan());
  out["singularities"] = sings;
  out["rho"] = integer_json(s.rho());
  out["k2"] = rational_json(s.k2());
  out["del_pezzo"] = s.del_pezzo();
  out["s"] = integer_json(s.s());
  auto defect = s.noether_defect();
  out["noether_defect"] = defect ? rational_json(*defect) : json(nullptr);
  return out;
}

json record_json(const SurfaceRecord& rec) {
  json sings = json::array();
  for (const auto& c : rec.singularities) sings.push_back(singularity_json(c));
  return {{"rho", integer_json(rec.rho)}, {"k2", rational_json(rec.k2)}, {"sings", sings},
          {"s", integer_json(rec.s())}, {"margin", integer_json(bound_report(rec).margin)},
          {"origin", rec.origin}};
}

SurfaceRecord record_from_json(const json& j) {
  if (j.is_object() && j.contains("rays") && !j.contains("sings")) {
    SurfaceRecord rec = record_from_fan(fan_from_json(j));
    return rec;
  }
  if (!j.is_object() || !j.contains("sings")) throw Error(ErrorKind::InvalidInput, "record needs \"sings\"");
  SurfaceRecord rec;
  rec.rho = integer_from_json(j.at("rho"));
  if (rec.rho < 1) throw Error(ErrorKind::InvalidInput, "rho must be positive");
  rec.k2 = rational_from_json(j.at("k2"));
  for (const auto& s : j.at("sings")) {
    SingularityClass c = singularity_from_json(s);
    if (!c.is_smooth()) rec.singularities.push_back(c);
  }
  std::sort(rec.singularities.begin(), rec.singularities.end());
  rec.origin = j.value("origin", std::string("file"));
  return rec;
}

json triple_json(const MarkovEquation& eq, const MarkovTriple& t) {
  json out = {{"a", integer_json(t.a)}, {"b", integer_json(t.b)}, {"c", integer_json(t.c)}};
  try {
    auto w = triple_to_weights(eq, t);
    out["weights"] = {integer_json(w[0]), integer_json(w[1]), integer_json(w[2])};
  } catch (const Error& e) {
    out["weights"] = nullptr;
    out["weights_error"] = e.what();
  }
  return out;
}

json example_json(const MarkovExample& ex) {
  json records = json::array();
  for (const auto& r : ex.records) records.push_back(record_json(r));
  return {{"triple", {integer_json(ex.triple.a), integer_json(ex.triple.b), integer_json(ex.triple.c)}},
          {"weights", {integer_json(ex.weights[0]), integer_json(ex.weights[1]), integer_json(ex.weights[2])}},
          {"delta", integer_json(ex.delta)},
          {"alpha", integer_json(ex.alpha)},
          {"third_point", germ_json(ex.third_point)},
          {"warning", ex.warning},
          {"base", record_json(ex.base)},
          {"records", records}};
}

namespace {

json tally_json(const CheckTally& t) { return {{"passed", t.passed}, {"failed", t.failed}}; }

}  // namespace

json report_json(const VerificationReport& r) {
  return {{"fans", r.fans},
          {"deformation_records", r.deformation_records},
          {"checks",
           {{"noether", tally_json(r.noether)},
            {"riemann_roch", tally_json(r.riemann_roch)},
            {"bound", tally_json(r.bound)},
            {"varsigma", tally_json(r.varsigma)},
            {"noether_preserved", tally_json(r.noether_preserved)}}},
          {"failed", r.failed()},
          {"failures", r.failures}};
}

}  // namespace tdp
