#pragma once

// Solutions of x^2 + y^2 + k z^2 = m x y z by Vieta mutation.

#include "tdp/arith.hpp"

#include <array>
#include <vector>

namespace tdp {

/// x^2 + y^2 + k z^2 = m x y z. Only the families k = m and (k, m) = (1, 3)
/// are supported; anything else throws Error(InvalidEquation).
class MarkovEquation {
 public:
  MarkovEquation(Integer k, Integer m);

  static MarkovEquation classical() { return {1, 3}; }
  static MarkovEquation del_pezzo_five() { return {5, 5}; }

  const Integer& k() const { return k_; }
  const Integer& m() const { return m_; }
  /// With k = 1 the equation is symmetric in all three unknowns.
  bool fully_symmetric() const { return k_ == 1; }

 private:
  Integer k_;
  Integer m_;
};

struct MarkovTriple {
  Integer a;
  Integer b;
  Integer c;

  Integer max() const;

  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
  friend bool operator<(const MarkovTriple& s, const MarkovTriple& t) {
    if (s.a != t.a) return s.a < t.a;
    if (s.b != t.b) return s.b < t.b;
    return s.c < t.c;
  }
};

inline constexpr int kRootScanLimit = 1000;

enum class Coordinate { X, Y, Z };

/// a <= b; for the fully symmetric equation all three are sorted.
MarkovTriple canonical(const MarkovEquation& eq, MarkovTriple t);

bool is_solution(const MarkovEquation& eq, const MarkovTriple& t);

/// Replaces one coordinate by the other root of the quadratic in it, keeping
/// positions (so mutating the same coordinate twice is the identity).
/// Throws Error(MutationUndefined) if the new root is not a positive integer,
/// Error(InvalidInput) if t is not a solution.
MarkovTriple mutate(const MarkovEquation& eq, const MarkovTriple& t, Coordinate coord);

/// Canonical solutions with every coordinate <= search_bound whose defined
/// mutations never decrease a + b + c; sorted.
std::vector<MarkovTriple> fundamental_solutions(const MarkovEquation& eq, const Integer& search_bound);

/// Breadth-first closure under mutation of the fundamental solutions, keeping
/// triples whose largest coordinate is <= bound. Canonical, sorted. Roots are
/// searched up to min(bound, kRootScanLimit).
std::vector<MarkovTriple> enumerate(const MarkovEquation& eq, const Integer& bound);

/// (a^2, b^2, k c^2). Throws Error(InvalidWeights) naming the common factor
/// if the weights are not pairwise coprime.
std::array<Integer, 3> triple_to_weights(const MarkovEquation& eq, const MarkovTriple& t);

}  // namespace tdp
