#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tdp::oracle {

namespace {

std::int64_t cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }
std::int64_t det(Pt u, Pt v) { return u.x * v.y - u.y * v.x; }

}  // namespace

std::vector<std::int64_t> sail_chain(Pt v1, Pt v2) {
  const std::int64_t D = det(v1, v2);
  if (D <= 0) throw std::invalid_argument("sail_chain needs det > 0");
  Pt far{v1.x + v2.x, v1.y + v2.y};
  std::int64_t x_lo = std::min({std::int64_t{0}, v1.x, v2.x, far.x}), x_hi = std::max({std::int64_t{0}, v1.x, v2.x, far.x});
  std::int64_t y_lo = std::min({std::int64_t{0}, v1.y, v2.y, far.y}), y_hi = std::max({std::int64_t{0}, v1.y, v2.y, far.y});
  std::vector<Pt> pts;
  for (std::int64_t x = x_lo; x <= x_hi; ++x) {
    for (std::int64_t y = y_lo; y <= y_hi; ++y) {
      if (x == 0 && y == 0) continue;
      std::int64_t s = x * v2.y - y * v2.x;  // D * coefficient of v1
      std::int64_t t = v1.x * y - v1.y * x;  // D * coefficient of v2
      if (s >= 0 && s <= D && t >= 0 && t <= D) pts.push_back({x, y});
    }
  }
  std::sort(pts.begin(), pts.end(), [](Pt a, Pt b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });

  // Andrew's monotone chain, strict vertices, counterclockwise.
  std::vector<Pt> hull;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t base = hull.size();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Pt p = pass == 0 ? pts[k] : pts[pts.size() - 1 - k];
      while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
  }

  const auto n = static_cast<std::ptrdiff_t>(hull.size());
  auto start = std::find(hull.begin(), hull.end(), v1) - hull.begin();
  std::vector<Pt> path;
  for (int step : {1, -1}) {
    path = {v1};
    bool through_far = false;
    for (std::ptrdiff_t j = start; !(path.back() == v2);) {
      j = ((j + step) % n + n) % n;
      path.push_back(hull[static_cast<std::size_t>(j)]);
      if (path.back() == far) {
        through_far = true;
        break;
      }
    }
    if (!through_far) break;
  }

  std::vector<Pt> boundary{path.front()};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Pt a = path[i], b = path[i + 1];
    std::int64_t g = std::gcd(b.x - a.x, b.y - a.y);
    for (std::int64_t k = 1; k <= g; ++k) boundary.push_back({a.x + (b.x - a.x) / g * k, a.y + (b.y - a.y) / g * k});
  }
  std::vector<std::int64_t> chain;
  for (std::size_t i = 1; i + 1 < boundary.size(); ++i) chain.push_back(det(boundary[i - 1], boundary[i + 1]));
  return chain;
}

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  for (std::int64_t x = 1; x < m; ++x) {
    if ((a * x) % m == 1) return x;
  }
  return 0;
}

}  // namespace

std::optional<TWitness> t_data_bruteforce(std::int64_t r, std::int64_t a) {
  if (r == 1) return TWitness{1, 1, 1};
  std::int64_t reps[2] = {((a % r) + r) % r, inverse_mod(((a % r) + r) % r, r)};
  for (std::int64_t n = 1; n * n <= r; ++n) {
    if (r % (n * n) != 0) continue;
    std::int64_t d = r / (n * n);
    for (std::int64_t rep : reps) {
      for (std::int64_t ap = 1; ap <= n; ++ap) {
        if (std::gcd(ap, n) != 1) continue;
        if (((d * n * ap - 1) % r + r) % r == rep) return TWitness{d, n, ap};
      }
    }
  }
  return std::nullopt;
}

std::pair<std::int64_t, std::int64_t> continued_fraction(const std::vector<std::int64_t>& chain) {
  // Left to right with convergents: h_k = b_k h_{k-1} - h_{k-2}.
  std::int64_t h_prev = 1, h = chain.empty() ? 1 : chain[0];
  std::int64_t k_prev = 0, k = 1;
  if (chain.empty()) return {1, 0};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    std::int64_t h_next = chain[i] * h - h_prev;
    std::int64_t k_next = chain[i] * k - k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return {h, k};
}

std::vector<std::array<std::int64_t, 3>> markov_scan(std::int64_t k, std::int64_t m, std::int64_t bound, bool symmetric) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (std::int64_t b = a; b <= bound; ++b) {
      __int128 mab = static_cast<__int128>(m) * a * b;
      __int128 disc = mab * mab - static_cast<__int128>(4) * k * (a * a + b * b);
      if (disc < 0) continue;
      auto s = static_cast<__int128>(std::sqrt(static_cast<long double>(disc)));
      while (s * s > disc) --s;
      while ((s + 1) * (s + 1) <= disc) ++s;
      if (s * s != disc) continue;
      for (__int128 num : {mab - s, mab + s}) {
        if (num <= 0 || num % (2 * k) != 0) continue;
        auto c = static_cast<std::int64_t>(num / (2 * k));
        if (c > bound) continue;
        std::array<std::int64_t, 3> t{a, b, c};
        if (symmetric) std::sort(t.begin(), t.end());
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t polygon_count_scan(const std::vector<Pt>& rays, std::int64_t n) {
  std::int64_t extent = 0;
  for (const auto& v : rays) extent = std::max({extent, std::abs(v.x), std::abs(v.y)});
  const std::int64_t box = 2 * n * extent;
  std::int64_t count = 0;
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      bool inside = std::all_of(rays.begin(), rays.end(), [&](const Pt& v) { return x * v.x + y * v.y >= -n; });
      if (inside) ++count;
    }
  }
  return count;
}

std::vector<std::vector<std::int64_t>> compositions(std::int64_t d) {
  std::vector<std::vector<std::int64_t>> out;
  if (d == 0) return {{}};
  for (std::int64_t first = 1; first <= d; ++first) {
    for (auto& rest : compositions(d - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

Pt random_primitive(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  for (;;) {
    Pt p{coord(rng), coord(rng)};
    if (std::gcd(p.x, p.y) == 1) return p;
  }
}

}  // namespace tdp::oracle
