#include "tdp/markov.hpp"
#include "tdp/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tdp {

MarkovEquation::MarkovEquation(Integer k, Integer m) : k_(std::move(k)), m_(std::move(m)) {
  if (k_ < 1 || m_ < 1) throw Error(ErrorKind::InvalidEquation, "coefficients must be positive");
  if (k_ != m_ && !(k_ == 1 && m_ == 3)) {
    throw Error(ErrorKind::InvalidEquation,
                "only k = m or (k, m) = (1, 3) are supported, got k = " + to_string(k_) + ", m = " + to_string(m_));
  }
}

Integer MarkovTriple::max() const { return std::max({a, b, c}); }

MarkovTriple canonical(const MarkovEquation& eq, MarkovTriple t) {
  if (eq.fully_symmetric()) {
    std::array<Integer, 3> v{t.a, t.b, t.c};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
  }
  if (t.b < t.a) std::swap(t.a, t.b);
  return t;
}

bool is_solution(const MarkovEquation& eq, const MarkovTriple& t) {
  return t.a * t.a + t.b * t.b + eq.k() * t.c * t.c == eq.m() * t.a * t.b * t.c;
}

MarkovTriple mutate(const MarkovEquation& eq, const MarkovTriple& t, Coordinate coord) {
  if (t.a < 1 || t.b < 1 || t.c < 1 || !is_solution(eq, t)) {
    throw Error(ErrorKind::InvalidInput, "(" + to_string(t.a) + "," + to_string(t.b) + "," + to_string(t.c) +
                                             ") is not a positive solution");
  }
  MarkovTriple out = t;
  switch (coord) {
    case Coordinate::X: out.a = eq.m() * t.b * t.c - t.a; break;
    case Coordinate::Y: out.b = eq.m() * t.a * t.c - t.b; break;
    case Coordinate::Z: {
      Integer sum = eq.m() * t.a * t.b;
      if (sum % eq.k() != 0) throw Error(ErrorKind::MutationUndefined, "z-root is not integral");
      out.c = sum / eq.k() - t.c;
      break;
    }
  }
  if (out.a < 1 || out.b < 1 || out.c < 1) throw Error(ErrorKind::MutationUndefined, "mutated root is not positive");
  return out;
}

namespace {

constexpr Coordinate kCoordinates[] = {Coordinate::X, Coordinate::Y, Coordinate::Z};

// No mutation lowers the height a + b + c. Descent along the height only
// shrinks coordinates, so the largest one never grows on the way to a root.
bool is_root(const MarkovEquation& eq, const MarkovTriple& t) {
  Integer height = t.a + t.b + t.c;
  for (Coordinate coord : kCoordinates) {
    try {
      MarkovTriple u = mutate(eq, t, coord);
      if (u.a + u.b + u.c < height) return false;
    } catch (const Error&) {
    }
  }
  return true;
}

}  // namespace

std::vector<MarkovTriple> fundamental_solutions(const MarkovEquation& eq, const Integer& search_bound) {
  std::vector<MarkovTriple> out;
  const Integer& k = eq.k();
  const Integer& m = eq.m();
  // Solve k c^2 - m a b c + (a^2 + b^2) = 0 for c.
  for (Integer a = 1; a <= search_bound; ++a) {
    for (Integer b = a; b <= search_bound; ++b) {
      Integer mab = m * a * b;
      Integer disc = mab * mab - 4 * k * (a * a + b * b);
      if (disc < 0) continue;
      Integer s = isqrt(disc);
      if (s * s != disc) continue;
      for (const Integer& num : {mab - s, mab + s}) {
        if (num <= 0 || num % (2 * k) != 0) continue;
        MarkovTriple t{a, b, num / (2 * k)};
        if (t.c > search_bound) continue;
        if (canonical(eq, t) != t) continue;
        if (is_root(eq, t) && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MarkovTriple> enumerate(const MarkovEquation& eq, const Integer& bound) {
  std::set<MarkovTriple> seen;
  std::deque<MarkovTriple> frontier;
  for (auto& root : fundamental_solutions(eq, std::min(bound, Integer(kRootScanLimit)))) {
    if (seen.insert(root).second) frontier.push_back(root);
  }
  while (!frontier.empty()) {
    MarkovTriple t = std::move(frontier.front());
    frontier.pop_front();
    for (Coordinate coord : kCoordinates) {
      MarkovTriple next;
      try {
        next = canonical(eq, mutate(eq, t, coord));
      } catch (const Error&) {
        continue;
      }
      if (next.max() > bound) continue;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::array<Integer, 3> triple_to_weights(const MarkovEquation& eq, const MarkovTriple& t) {
  if (!is_solution(eq, t)) {
    throw Error(ErrorKind::InvalidInput,
                "(" + to_string(t.a) + "," + to_string(t.b) + "," + to_string(t.c) + ") is not a solution");
  }
  std::array<Integer, 3> w{t.a * t.a, t.b * t.b, eq.k() * t.c * t.c};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Integer g = gcd(w[i], w[j]);
      if (g != 1) {
        throw Error(ErrorKind::InvalidWeights, "weights " + to_string(w[i]) + " and " + to_string(w[j]) +
                                                   " share the factor " + to_string(g));
      }
    }
  }
  return w;
}

}  // namespace tdp
