#pragma once

// Test-only oracles. Each one recomputes a quantity by a route independent of
// the library code it is compared against, using machine integers.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace tdp::oracle {

struct Pt {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const Pt&, const Pt&) = default;
};

/// Minimal resolution of the cone spanned by v1, v2 (det > 0) read off the
/// compact boundary of conv((cone ∩ Z^2) \ {0}): the boundary lattice points
/// u_0 = v1, ..., u_{k+1} = v2 satisfy u_{i-1} + u_{i+1} = b_i u_i, and the
/// result is [b_1, ..., b_k] (empty for a smooth cone).
std::vector<std::int64_t> sail_chain(Pt v1, Pt v2);

struct TWitness {
  std::int64_t d, n, aprime;
};

/// Scans every n with n^2 | r, d = r / n^2, both representatives a and
/// a^{-1} mod r, and every a' in [1, n] coprime to n. First hit in increasing n.
std::optional<TWitness> t_data_bruteforce(std::int64_t r, std::int64_t a);

/// Exact value of the continued fraction [b1, ..., bk] as (numerator, denominator).
std::pair<std::int64_t, std::int64_t> continued_fraction(const std::vector<std::int64_t>& chain);

/// Every positive solution of x^2 + y^2 + k z^2 = m x y z with all coordinates
/// <= bound, by direct scan; x <= y, and fully sorted when symmetric.
std::vector<std::array<std::int64_t, 3>> markov_scan(std::int64_t k, std::int64_t m, std::int64_t bound, bool symmetric);

/// Lattice points m in a box with <m, v> >= -n for every ray v.
std::int64_t polygon_count_scan(const std::vector<Pt>& rays, std::int64_t n);

/// All ordered compositions of d.
std::vector<std::vector<std::int64_t>> compositions(std::int64_t d);

/// Random primitive vector with |coordinates| <= bound.
Pt random_primitive(std::mt19937_64& rng, std::int64_t bound);

}  // namespace tdp::oracle
