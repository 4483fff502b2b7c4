#pragma once

// Two-dimensional cyclic quotient and Du Val singularities: Hirzebruch-Jung
// chains, T-singularity recognition, Milnor numbers, Gorenstein index and the
// local class groups of D/E points.

#include "tdp/arith.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tdp {

/// The germ 1/r(1,a). Always held in canonical form: gcd(a, r) = 1, 1 <= a < r,
/// and a <= a^{-1} mod r. The smooth germ is (1, 0).
class CyclicQuotSing {
 public:
  CyclicQuotSing() : r_(1), a_(0) {}

  static CyclicQuotSing smooth() { return {}; }

  const Integer& r() const { return r_; }
  const Integer& a() const { return a_; }

  bool is_smooth() const { return r_ == 1; }
  /// Type A_{r-1}; the smooth germ counts as A_0.
  bool is_du_val() const { return r_ == 1 || a_ + 1 == r_; }

  friend bool operator==(const CyclicQuotSing& x, const CyclicQuotSing& y) {
    return x.r_ == y.r_ && x.a_ == y.a_;
  }
  friend bool operator<(const CyclicQuotSing& x, const CyclicQuotSing& y) {
    return x.r_ != y.r_ ? x.r_ < y.r_ : x.a_ < y.a_;
  }

 private:
  friend CyclicQuotSing normalize(const Integer& r, const Integer& a);
  CyclicQuotSing(Integer r, Integer a) : r_(std::move(r)), a_(std::move(a)) {}

  Integer r_;
  Integer a_;
};

/// Canonical form of 1/r(1,a). Throws Error(InvalidGerm) when r < 1 or
/// gcd(a mod r, r) != 1.
CyclicQuotSing normalize(const Integer& r, const Integer& a);

using HJChain = std::vector<Integer>;

/// Hirzebruch-Jung expansion r/a = b1 - 1/(b2 - ...) of the canonical germ.
/// Empty for the smooth germ.
HJChain hj_expansion(const CyclicQuotSing& s);

/// Expansion of r/a for an arbitrary (not necessarily canonical) weight
/// 0 < a < r with gcd(a, r) = 1. Used where the orientation of the chain matters.
HJChain hj_expansion(const Integer& r, const Integer& a);

/// Evaluates a chain to the raw fraction (r, a) with r/a = [b1, ..., bk].
/// Throws Error(InvalidChain) if some entry is < 2.
std::pair<Integer, Integer> hj_fraction(std::span<const Integer> chain);

/// Canonical germ with the given chain; the empty chain gives the smooth germ.
CyclicQuotSing from_hj(std::span<const Integer> chain);

struct TClassData {
  Integer d;
  Integer n;
  Integer aprime;

  friend bool operator==(const TClassData&, const TClassData&) = default;
};

/// Witness (d, n, a') with the germ isomorphic to 1/(dn^2)(1, dna'-1) and
/// gcd(a', n) = 1, or nullopt. Du Val A germs give n = 1, d = r; the smooth
/// germ gives (1, 1, 1).
std::optional<TClassData> t_data(const CyclicQuotSing& s);

/// Every witness over both representatives a and a^{-1}, ordered by (n, a').
std::vector<TClassData> t_witnesses(const CyclicQuotSing& s);

/// Recursive recognition of T-chains: all-2 chains, the bases [4] and
/// [3, 2, ..., 2, 3], and the moves [b] -> [2, b1, ..., bk + 1] and
/// [b] -> [b1 + 1, ..., bk, 2]. Throws Error(InvalidChain) on entries < 2.
bool wahl_chain_is_t(std::span<const Integer> chain);

/// r / gcd(r, a + 1).
Integer gorenstein_index(const CyclicQuotSing& s);

struct SmoothPoint {
  friend bool operator==(const SmoothPoint&, const SmoothPoint&) = default;
  friend bool operator<(const SmoothPoint&, const SmoothPoint&) { return false; }
};

struct DuValD {
  int n;  // >= 4
  friend bool operator==(const DuValD&, const DuValD&) = default;
  friend bool operator<(const DuValD& x, const DuValD& y) { return x.n < y.n; }
};

struct DuValE {
  int n;  // 6, 7 or 8
  friend bool operator==(const DuValE&, const DuValE&) = default;
  friend bool operator<(const DuValE& x, const DuValE& y) { return x.n < y.n; }
};

/// A singular point of a surface, with its Milnor number cached when defined
/// (Du Val or T-singularity).
class SingularityClass {
 public:
  using Variant = std::variant<SmoothPoint, CyclicQuotSing, DuValD, DuValE>;

  SingularityClass() : SingularityClass(SmoothPoint{}) {}
  SingularityClass(SmoothPoint p);
  /// The smooth germ maps to the Smooth variant.
  SingularityClass(const CyclicQuotSing& s);
  /// Throws Error(InvalidGerm) unless n >= 4.
  SingularityClass(DuValD d);
  /// Throws Error(InvalidGerm) unless n is 6, 7 or 8.
  SingularityClass(DuValE e);

  static SingularityClass type_a(const Integer& rank);

  const Variant& variant() const { return v_; }
  const CyclicQuotSing* cyclic() const { return std::get_if<CyclicQuotSing>(&v_); }
  bool is_smooth() const { return std::holds_alternative<SmoothPoint>(v_); }
  bool is_du_val() const;
  bool is_t() const { return milnor_.has_value(); }
  const std::optional<Integer>& cached_milnor() const { return milnor_; }

  /// A4, D5, E8, 1/20(1,9), smooth.
  std::string label() const;

  friend bool operator==(const SingularityClass& x, const SingularityClass& y) { return x.v_ == y.v_; }
  friend bool operator<(const SingularityClass& x, const SingularityClass& y) { return x.v_ < y.v_; }

 private:
  Variant v_;
  std::optional<Integer> milnor_;
};

/// r for Du Val of type A_r, D_r, E_r; d - 1 for 1/(dn^2)(1, dna-1).
/// Throws Error(NotTSingularity) otherwise.
Integer milnor_number(const SingularityClass& c);

/// Orders of the cyclic factors of the local Weil divisor class group.
using ClassGroupDescriptor = std::vector<Integer>;

/// A_{r-1} -> [r]; D_{odd} -> [4]; D_{even} -> [2, 2]; E6 -> [3]; E7 -> [2];
/// E8 and smooth -> []. Throws Error(NotDuVal) for other cyclic germs.
ClassGroupDescriptor du_val_class_group(const SingularityClass& c);

}  // namespace tdp
