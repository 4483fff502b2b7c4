#include "tdp/qgdeform.hpp"
#include "tdp/error.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tdp {

Integer SurfaceRecord::s() const {
  Integer n = 0;
  for (const auto& c : singularities) {
    if (!c.is_du_val()) ++n;
  }
  return n;
}

bool SurfaceRecord::all_t() const {
  return std::all_of(singularities.begin(), singularities.end(), [](const SingularityClass& c) { return c.is_t(); });
}

Rational SurfaceRecord::noether_defect() const {
  Rational defect = Rational(10) - k2 - rho;
  for (const auto& c : singularities) defect -= milnor_number(c);
  return defect;
}

std::string describe(const DeformationStep& step) {
  std::string parts;
  for (const auto& p : step.partition) {
    if (!parts.empty()) parts += ",";
    parts += to_string(p);
  }
  return "point " + std::to_string(step.point_index) + ", partition " + parts + ", case " +
         (step.which == DeformationCase::A ? "A" : "B");
}

SurfaceRecord record_from_surface(const ToricSurface& s) {
  SurfaceRecord rec;
  rec.rho = s.rho();
  rec.k2 = s.k2();
  for (const auto& c : s.singularities()) {
    if (!c.is_smooth()) rec.singularities.push_back(c);
  }
  std::sort(rec.singularities.begin(), rec.singularities.end());
  rec.origin = "fan";
  return rec;
}

SurfaceRecord record_from_fan(const Fan& f) { return record_from_surface(ToricSurface(f)); }

SurfaceRecord deform(const SurfaceRecord& rec, const DeformationStep& step) {
  if (step.point_index >= rec.singularities.size()) {
    throw Error(ErrorKind::InvalidDeformation, "point index " + std::to_string(step.point_index) + " out of range");
  }
  const SingularityClass& target = rec.singularities[step.point_index];
  const CyclicQuotSing* germ = target.cyclic();
  if (germ == nullptr) throw Error(ErrorKind::InvalidDeformation, target.label() + " has no partition rule");
  auto t = t_data(*germ);
  if (!t) throw Error(ErrorKind::InvalidDeformation, target.label() + " is not a T-singularity");
  if (step.partition.empty()) throw Error(ErrorKind::InvalidDeformation, "empty partition");
  Integer sum = 0;
  for (const auto& p : step.partition) {
    if (p < 1) throw Error(ErrorKind::InvalidDeformation, "partition parts must be positive");
    sum += p;
  }
  if (sum != t->d) {
    throw Error(ErrorKind::InvalidDeformation,
                "partition sums to " + to_string(sum) + " but the point has d = " + to_string(t->d));
  }

  SurfaceRecord out;
  out.k2 = rec.k2;
  out.rho = rec.rho + Integer(step.partition.size()) - 1;
  for (std::size_t i = 0; i < rec.singularities.size(); ++i) {
    if (i != step.point_index) out.singularities.push_back(rec.singularities[i]);
  }
  std::size_t first_a = 0;
  if (step.which == DeformationCase::B) {
    const Integer& d1 = step.partition.front();
    Integer r = d1 * t->n * t->n;
    if (r == 1) throw Error(ErrorKind::InvalidDeformation, "case B with d1 n^2 = 1");
    out.singularities.emplace_back(normalize(r, d1 * t->n * t->aprime - 1));
    first_a = 1;
  }
  for (std::size_t i = first_a; i < step.partition.size(); ++i) {
    if (step.partition[i] > 1) out.singularities.push_back(SingularityClass::type_a(step.partition[i] - 1));
  }
  std::sort(out.singularities.begin(), out.singularities.end());
  out.origin = "deformation-of(" + rec.origin + ", " + describe(step) + ")";
  return out;
}

namespace {

void descending_partitions(const Integer& remaining, const Integer& max_part, std::vector<Integer>& prefix,
                           std::vector<std::vector<Integer>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (Integer part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    descending_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Integer>> partitions_with_first_part(const Integer& d) {
  std::vector<std::vector<Integer>> out;
  for (Integer d1 = d; d1 >= 1; --d1) {
    std::vector<Integer> prefix{d1};
    descending_partitions(d - d1, d - d1, prefix, out);
  }
  return out;
}

std::vector<SurfaceRecord> enumerate_deformations(const SurfaceRecord& rec) {
  std::vector<SurfaceRecord> out;
  auto add = [&out](SurfaceRecord r) {
    for (const auto& existing : out) {
      if (same_surface(existing, r)) return;
    }
    out.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < rec.singularities.size(); ++i) {
    const CyclicQuotSing* germ = rec.singularities[i].cyclic();
    if (germ == nullptr) continue;
    auto t = t_data(*germ);
    if (!t) continue;
    for (auto& partition : partitions_with_first_part(t->d)) {
      add(deform(rec, {i, partition, DeformationCase::A}));
      // With n = 1 the case-B piece is A_{d1-1}, the same as case A.
      if (t->n > 1) add(deform(rec, {i, partition, DeformationCase::B}));
    }
  }
  return out;
}

MarkovExample markov_family_example(const MarkovTriple& t) {
  MarkovEquation eq = MarkovEquation::del_pezzo_five();
  if (t.a < 1 || t.b < 1 || t.c < 1 || !is_solution(eq, t)) {
    throw Error(ErrorKind::InvalidInput, "(" + to_string(t.a) + "," + to_string(t.b) + "," + to_string(t.c) +
                                             ") does not solve a^2 + b^2 + 5c^2 = 5abc");
  }
  MarkovExample ex;
  ex.triple = t;
  ex.weights = triple_to_weights(eq, t);
  Integer modulus = 5 * t.c * t.c;
  auto delta = mod_inverse(t.a * t.a, modulus);
  if (!delta) throw Error(ErrorKind::InvalidInput, "a^2 is not invertible modulo 5c^2");
  ex.delta = *delta;
  ex.alpha = t.a * t.b * ex.delta;
  ex.third_point = normalize(modulus, 5 * t.c * ex.alpha - 1);
  ex.warning = t.a == 1 || t.b == 1 || t.c == 1;

  ex.base = record_from_fan(wps_fan(ex.weights[0], ex.weights[1], ex.weights[2]));
  ex.base.origin = "wps(" + to_string(ex.weights[0]) + "," + to_string(ex.weights[1]) + "," +
                   to_string(ex.weights[2]) + ")";
  auto it = std::find(ex.base.singularities.begin(), ex.base.singularities.end(), SingularityClass(ex.third_point));
  if (it == ex.base.singularities.end()) {
    throw std::logic_error("third point " + SingularityClass(ex.third_point).label() +
                           " missing from the toric singularity content");
  }
  std::size_t index = static_cast<std::size_t>(it - ex.base.singularities.begin());
  auto td = t_data(ex.third_point);
  if (!td || td->d != 5 || td->n != t.c) throw std::logic_error("third point is not 1/(5c^2)(1, 5c alpha - 1)");

  DeformationCase which = td->n > 1 ? DeformationCase::B : DeformationCase::A;
  for (int d1 = 1; d1 <= 4; ++d1) {
    ex.records.push_back(deform(ex.base, {index, {Integer(d1), Integer(5 - d1)}, which}));
  }
  return ex;
}

const char* to_string(BoundClass c) {
  switch (c) {
    case BoundClass::Extremal: return "extremal";
    case BoundClass::Subextremal: return "subextremal";
    case BoundClass::Interior: return "interior";
    case BoundClass::Violated: return "violated";
  }
  return "";
}

BoundReport bound_report(const SurfaceRecord& rec) {
  BoundReport r{rec.s(), rec.rho, rec.rho + 2 - rec.s(), BoundClass::Interior};
  if (r.margin < 0) {
    r.cls = BoundClass::Violated;
  } else if (r.margin == 0) {
    r.cls = BoundClass::Extremal;
  } else if (r.margin == 1) {
    r.cls = BoundClass::Subextremal;
  }
  return r;
}

}  // namespace tdp
