#include "tdp/toric.hpp"
#include "tdp/error.hpp"

#include <algorithm>

namespace tdp {

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const LatticeVector& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(const LatticeVector& u, const LatticeVector& v) {
  int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return det(u, v) > 0;
}

std::string describe(const LatticeVector& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }

Integer dot_scaled_vertex(const LatticeVector& vi, const LatticeVector& vk, const LatticeVector& w) {
  // D * <m_sigma, w> with D = det(vi, vk) and m_sigma = (vi.y - vk.y, vk.x - vi.x) / D.
  return (vi.y - vk.y) * w.x + (vk.x - vi.x) * w.y;
}

}  // namespace

const LatticeVector& Fan::ray(std::ptrdiff_t i) const {
  auto n = static_cast<std::ptrdiff_t>(rays_.size());
  return rays_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Fan fan_from_rays(std::vector<LatticeVector> rays) {
  if (rays.size() < 3) throw Error(ErrorKind::InvalidFan, "a complete fan needs at least three rays");
  for (const auto& v : rays) {
    if (!is_primitive(v)) throw Error(ErrorKind::InvalidFan, "ray " + describe(v) + " is not primitive");
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& u = rays[i];
    const auto& v = rays[(i + 1) % rays.size()];
    if (u == v) throw Error(ErrorKind::InvalidFan, "duplicate ray " + describe(u));
    Integer d = det(u, v);
    if (d == 0) {
      throw Error(ErrorKind::InvalidFan, "cone " + describe(u) + "," + describe(v) + " is not strictly convex");
    }
    if (d < 0) {
      throw Error(ErrorKind::InvalidFan, "rays leave a gap after " + describe(u) + "; fan is not complete");
    }
  }
  return Fan(std::move(rays));
}

Fan transform(const Fan& f, const Matrix2& m) {
  Integer dm = m.determinant();
  if (dm != 1 && dm != -1) throw Error(ErrorKind::InvalidInput, "transform is not unimodular");
  std::vector<LatticeVector> rays;
  rays.reserve(f.size());
  for (const auto& v : f.rays()) rays.push_back(m(v));
  return fan_from_rays(std::move(rays));
}

ConeNormalForm cone_normal_form(const LatticeVector& v1, const LatticeVector& v2) {
  if (!is_primitive(v1) || !is_primitive(v2)) throw Error(ErrorKind::InvalidFan, "cone generators must be primitive");
  Integer r = det(v1, v2);
  if (r <= 0) throw Error(ErrorKind::InvalidFan, "cone " + describe(v1) + "," + describe(v2) + " has non-positive determinant");
  Bezout e = ext_gcd(v1.x, v1.y);
  Matrix2 frame{e.x, e.y, -v1.y, v1.x};
  Integer p0 = frame(v2).x;
  Integer p = mod_floor(p0, r);
  Matrix2 shear{1, (p - p0) / r, 0, 1};
  frame = shear * frame;
  Integer weight = mod_floor(r - p, r);
  return {frame, r, p, weight};
}

CyclicQuotSing cone_singularity(const LatticeVector& v1, const LatticeVector& v2) {
  // The cone does not depend on the order of its generators.
  ConeNormalForm c = det(v1, v2) < 0 ? cone_normal_form(v2, v1) : cone_normal_form(v1, v2);
  return normalize(c.r, c.weight);
}

Fan unimodular_canonical_form(const Fan& f) {
  std::optional<Fan> best;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto i0 = static_cast<std::ptrdiff_t>(i);
    ConeNormalForm c = cone_normal_form(f.ray(i0), f.ray(i0 + 1));
    Fan candidate = transform(f, c.frame);
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return *best;
}

std::vector<SingularityClass> singularity_content(const Fan& f) {
  std::vector<SingularityClass> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto i0 = static_cast<std::ptrdiff_t>(i);
    if (det(f.ray(i0), f.ray(i0 + 1)) > 1) out.emplace_back(cone_singularity(f.ray(i0), f.ray(i0 + 1)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer picard_rank(const Fan& f) { return Integer(f.size()) - 2; }

IntersectionMatrix intersection_numbers(const Fan& f) {
  const std::size_t k = f.size();
  IntersectionMatrix m(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    auto i0 = static_cast<std::ptrdiff_t>(i);
    const auto& prev = f.ray(i0 - 1);
    const auto& cur = f.ray(i0);
    const auto& next = f.ray(i0 + 1);
    Integer left = det(prev, cur), right = det(cur, next);
    m[i][i] = Rational(-det(prev, next), left * right);
    std::size_t j = (i + 1) % k;
    m[i][j] = Rational(1, right);
    m[j][i] = m[i][j];
  }
  return m;
}

Rational k_squared(const Fan& f) {
  Rational sum = 0;
  for (const auto& row : intersection_numbers(f)) {
    for (const auto& x : row) sum += x;
  }
  return sum;
}

std::pair<Rational, Rational> anticanonical_vertex(const Fan& f, std::ptrdiff_t i) {
  const auto& vi = f.ray(i);
  const auto& vk = f.ray(i + 1);
  Integer d = det(vi, vk);
  return {Rational(vi.y - vk.y, d), Rational(vk.x - vi.x, d)};
}

namespace {

// Sign of <m_sigma, v_j> + 1 over all cones and outside rays: returns
// {all strictly positive, all nonnegative}.
std::pair<bool, bool> support_function_convexity(const Fan& f) {
  bool strict = true, weak = true;
  const auto k = static_cast<std::ptrdiff_t>(f.size());
  for (std::ptrdiff_t i = 0; i < k; ++i) {
    const auto& vi = f.ray(i);
    const auto& vk = f.ray(i + 1);
    Integer d = det(vi, vk);
    for (std::ptrdiff_t j = 2; j < k; ++j) {
      Integer value = dot_scaled_vertex(vi, vk, f.ray(i + j)) + d;
      if (value <= 0) strict = false;
      if (value < 0) weak = false;
    }
  }
  return {strict, weak};
}

}  // namespace

bool is_del_pezzo(const Fan& f) { return support_function_convexity(f).first; }

bool is_nef_big(const Fan& f) { return support_function_convexity(f).second && k_squared(f) > 0; }

Integer anticanonical_point_count(const Fan& f, const Integer& n, bool allow_nef_big) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "multiple must be positive");
  if (!is_del_pezzo(f) && !(allow_nef_big && is_nef_big(f))) {
    throw Error(ErrorKind::NotNefBig, allow_nef_big ? "-K is not nef and big" : "-K is not ample");
  }
  Rational lo_x, hi_x;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Rational x = anticanonical_vertex(f, static_cast<std::ptrdiff_t>(i)).first * n;
    if (i == 0 || x < lo_x) lo_x = x;
    if (i == 0 || x > hi_x) hi_x = x;
  }
  Integer first = ceil_div(numerator(lo_x), denominator(lo_x));
  Integer last = floor_div(numerator(hi_x), denominator(hi_x));
  Integer count = 0;
  for (Integer x = first; x <= last; ++x) {
    std::optional<Integer> y_lo, y_hi;
    bool empty = false;
    for (const auto& v : f.rays()) {
      // x v.x + y v.y >= -n
      Integer rhs = -n - x * v.x;
      if (v.y > 0) {
        Integer b = ceil_div(rhs, v.y);
        if (!y_lo || b > *y_lo) y_lo = b;
      } else if (v.y < 0) {
        Integer b = floor_div(rhs, v.y);
        if (!y_hi || b < *y_hi) y_hi = b;
      } else if (rhs > 0) {
        empty = true;
      }
    }
    if (!y_lo || !y_hi) throw Error(ErrorKind::InvalidFan, "anticanonical polygon is unbounded");
    if (!empty && *y_hi >= *y_lo) count += *y_hi - *y_lo + 1;
  }
  return count;
}

Fan wps_fan(const Integer& w0_in, const Integer& w1_in, const Integer& w2_in) {
  if (w0_in < 1 || w1_in < 1 || w2_in < 1) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
  Integer common = gcd(gcd(w0_in, w1_in), w2_in);
  Integer w0 = w0_in / common, w1 = w1_in / common, w2 = w2_in / common;
  const Integer* w[3] = {&w0, &w1, &w2};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Integer g = gcd(*w[i], *w[j]);
      if (g != 1) {
        throw Error(ErrorKind::InvalidWeights, "weights " + to_string(*w[i]) + " and " + to_string(*w[j]) +
                                                   " share the factor " + to_string(g));
      }
    }
  }
  // Rows u1, u2 form a basis of the integer vectors orthogonal to w; their
  // columns are the rays.
  Bezout e = ext_gcd(w0, w1);
  Integer a = w0 / e.g, b = w1 / e.g;
  LatticeVector v0{b, w2 * e.x};
  LatticeVector v1{-a, w2 * e.y};
  LatticeVector v2{0, -e.g};
  return fan_from_rays({v0, v1, v2});
}

Integer varsigma_toric(const Fan& f) { return picard_rank(f) + 2 - Integer(f.size()); }

Integer s_count(const Fan& f) {
  Integer s = 0;
  for (const auto& c : singularity_content(f)) {
    if (!c.is_du_val()) ++s;
  }
  return s;
}

ToricSurface::ToricSurface(Fan fan)
    : fan_(std::move(fan)),
      sings_(singularity_content(fan_)),
      rho_(picard_rank(fan_)),
      k2_(k_squared(fan_)),
      del_pezzo_(is_del_pezzo(fan_)),
      s_(0) {
  for (const auto& c : sings_) {
    if (!c.is_du_val()) ++s_;
  }
}

bool ToricSurface::all_t() const {
  return std::all_of(sings_.begin(), sings_.end(), [](const SingularityClass& c) { return c.is_t(); });
}

std::optional<Rational> ToricSurface::noether_defect() const {
  if (!all_t()) return std::nullopt;
  Rational defect = Rational(10) - k2_ - rho_;
  for (const auto& c : sings_) defect -= milnor_number(c);
  return defect;
}

}  // namespace tdp
