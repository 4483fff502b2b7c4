#pragma once

// Complete toric surfaces given by two-dimensional lattice fans.

#include "tdp/arith.hpp"
#include "tdp/quotsing.hpp"

#include <optional>
#include <vector>

namespace tdp {

struct LatticeVector {
  Integer x;
  Integer y;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator<(const LatticeVector& u, const LatticeVector& v) {
    return u.x != v.x ? u.x < v.x : u.y < v.y;
  }
};

inline Integer det(const LatticeVector& u, const LatticeVector& v) { return u.x * v.y - u.y * v.x; }

inline bool is_primitive(const LatticeVector& v) { return gcd(v.x, v.y) == 1; }

/// Integer 2x2 matrix acting on column vectors.
struct Matrix2 {
  Integer a, b, c, d;

  Integer determinant() const { return a * d - b * c; }
  LatticeVector operator()(const LatticeVector& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  friend Matrix2 operator*(const Matrix2& m, const Matrix2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
};

/// Complete fan: at least three distinct primitive rays in counterclockwise
/// order starting from the positive x-axis, every consecutive determinant
/// (cyclically) positive.
class Fan {
 public:
  const std::vector<LatticeVector>& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  /// Cyclic indexing.
  const LatticeVector& ray(std::ptrdiff_t i) const;

  friend bool operator==(const Fan&, const Fan&) = default;
  friend bool operator<(const Fan& f, const Fan& g) { return f.rays_ < g.rays_; }

 private:
  friend Fan fan_from_rays(std::vector<LatticeVector> rays);
  explicit Fan(std::vector<LatticeVector> rays) : rays_(std::move(rays)) {}

  std::vector<LatticeVector> rays_;
};

/// Sorts counterclockwise and validates. Throws Error(InvalidFan) for fewer
/// than three rays, non-primitive or duplicate rays, opposite neighbours
/// (a cone that is not strictly convex) or a gap of more than a half turn
/// (not complete).
Fan fan_from_rays(std::vector<LatticeVector> rays);

/// Applies a determinant +-1 transform to every ray.
Fan transform(const Fan& f, const Matrix2& m);

/// Representative of the SL(2, Z) orbit of f: the lexicographically least
/// ray list over the frames that send some ray to (1, 0) and its successor
/// to (p, r) with 0 <= p < r.
Fan unimodular_canonical_form(const Fan& f);

struct ConeNormalForm {
  Matrix2 frame;   // determinant 1, frame(v1) = (1, 0), frame(v2) = (p, r)
  Integer r;       // det(v1, v2)
  Integer p;       // 0 <= p < r
  Integer weight;  // (r - p) mod r: the cone is 1/r(1, weight) with the
                   // resolution chain of r/weight read from v1 towards v2
};

/// Throws Error(InvalidFan) unless det(v1, v2) > 0 and both are primitive.
ConeNormalForm cone_normal_form(const LatticeVector& v1, const LatticeVector& v2);

/// The cyclic quotient germ of the cone spanned by v1, v2 (canonical form),
/// in either order. Throws Error(InvalidFan) if they are dependent or not
/// primitive.
CyclicQuotSing cone_singularity(const LatticeVector& v1, const LatticeVector& v2);

/// One entry per cone with determinant > 1, sorted.
std::vector<SingularityClass> singularity_content(const Fan& f);

/// Number of rays minus two.
Integer picard_rank(const Fan& f);

using IntersectionMatrix = std::vector<std::vector<Rational>>;

/// D_i.D_{i+1} = 1/det(v_i, v_{i+1});
/// D_i^2 = -det(v_{i-1}, v_{i+1}) / (det(v_{i-1}, v_i) det(v_i, v_{i+1})).
IntersectionMatrix intersection_numbers(const Fan& f);

/// (sum of ray divisors)^2.
Rational k_squared(const Fan& f);

/// The point m_sigma with <m, v_i> = <m, v_{i+1}> = -1 for the cone i.
std::pair<Rational, Rational> anticanonical_vertex(const Fan& f, std::ptrdiff_t i);

/// -K ample: <m_sigma, v_j> > -1 for every cone sigma and ray v_j outside it.
bool is_del_pezzo(const Fan& f);

/// -K nef (<m_sigma, v_j> >= -1) and big (K^2 > 0).
bool is_nef_big(const Fan& f);

/// Number of lattice points m with <m, v_i> >= -n for all rays, which is
/// h^0(-nK). Requires -K ample, or nef and big when allow_nef_big is set;
/// throws Error(NotNefBig) otherwise.
Integer anticanonical_point_count(const Fan& f, const Integer& n, bool allow_nef_big = false);

/// Fan of P(w0, w1, w2): primitive rays with w0 v0 + w1 v1 + w2 v2 = 0.
/// A common factor of all three weights is divided out first; the remaining
/// weights must be pairwise coprime, else Error(InvalidWeights).
Fan wps_fan(const Integer& w0, const Integer& w1, const Integer& w2);

/// varrho + 2 - ||D|| for the reduced invariant boundary.
Integer varsigma_toric(const Fan& f);

/// Number of singular points with Gorenstein index > 1.
Integer s_count(const Fan& f);

/// A fan with its derived invariants computed once.
class ToricSurface {
 public:
  explicit ToricSurface(Fan fan);

  const Fan& fan() const { return fan_; }
  const std::vector<SingularityClass>& singularities() const { return sings_; }
  const Integer& rho() const { return rho_; }
  const Rational& k2() const { return k2_; }
  bool del_pezzo() const { return del_pezzo_; }
  const Integer& s() const { return s_; }
  bool all_t() const;
  /// 10 - K^2 - rho - sum of Milnor numbers; nullopt unless every point is T.
  std::optional<Rational> noether_defect() const;

 private:
  Fan fan_;
  std::vector<SingularityClass> sings_;
  Integer rho_;
  Rational k2_;
  bool del_pezzo_;
  Integer s_;
};

}  // namespace tdp
