#pragma once

// Q-Gorenstein deformation combinatorics on abstract surface data.
//
// A record keeps only (rho, K^2, singular points). A local deformation of a
// T-point 1/(dn^2)(1, dna-1) along a partition d = d1 + ... + dl yields
//   case A: A_{d1-1}, ..., A_{dl-1}
//   case B: 1/(d1 n^2)(1, d1 n a - 1), A_{d2-1}, ..., A_{dl-1}
// and raises rho by l - 1; K^2 is unchanged.

#include "tdp/arith.hpp"
#include "tdp/markov.hpp"
#include "tdp/quotsing.hpp"
#include "tdp/toric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tdp {

struct SurfaceRecord {
  Integer rho;
  Rational k2;
  std::vector<SingularityClass> singularities;  // sorted, smooth points dropped
  std::string origin;

  /// Number of non-Du Val points.
  Integer s() const;
  bool all_t() const;
  /// 10 - K^2 - rho - sum of Milnor numbers. Throws Error(NotTSingularity)
  /// if some point is not T.
  Rational noether_defect() const;

  /// Equality of the surface data; origin is ignored.
  friend bool same_surface(const SurfaceRecord& x, const SurfaceRecord& y) {
    return x.rho == y.rho && x.k2 == y.k2 && x.singularities == y.singularities;
  }
};

enum class DeformationCase { A, B };

struct DeformationStep {
  std::size_t point_index = 0;    // into SurfaceRecord::singularities
  std::vector<Integer> partition;  // positive parts summing to d; parts after the first are unordered
  DeformationCase which = DeformationCase::A;
};

std::string describe(const DeformationStep& step);

SurfaceRecord record_from_fan(const Fan& f);
SurfaceRecord record_from_surface(const ToricSurface& s);

/// Throws Error(InvalidDeformation) for an index out of range, a target that
/// is not a cyclic T-point, a partition with non-positive parts or the wrong
/// sum, or case B with d1 n^2 = 1.
SurfaceRecord deform(const SurfaceRecord& rec, const DeformationStep& step);

/// All partitions of d with a distinguished first part: d1 from d down to 1,
/// followed by the partitions of d - d1 with parts in descending order.
std::vector<std::vector<Integer>> partitions_with_first_part(const Integer& d);

/// Every point x every partition x both cases, merged by surface equality.
/// The result contains the record itself (case B with the trivial partition).
std::vector<SurfaceRecord> enumerate_deformations(const SurfaceRecord& rec);

struct MarkovExample {
  MarkovTriple triple;
  std::array<Integer, 3> weights;
  Integer delta;  // a^2 delta = 1 mod 5c^2
  Integer alpha;  // a b delta
  CyclicQuotSing third_point;  // 1/(5c^2)(1, 5c alpha - 1)
  SurfaceRecord base;
  std::vector<SurfaceRecord> records;
  /// Some coordinate equals 1, so fewer than three singular points.
  bool warning = false;
};

/// P(a^2, b^2, 5c^2) for a solution of a^2 + b^2 + 5c^2 = 5abc, with its
/// third point deformed along the partitions (1,4), (2,3), (3,2), (4,1).
/// Throws Error(InvalidInput) if the triple is not a solution.
MarkovExample markov_family_example(const MarkovTriple& t);

enum class BoundClass { Extremal, Subextremal, Interior, Violated };

const char* to_string(BoundClass c);

struct BoundReport {
  Integer s;
  Integer rho;
  Integer margin;  // rho + 2 - s
  BoundClass cls;
};

BoundReport bound_report(const SurfaceRecord& rec);

}  // namespace tdp
