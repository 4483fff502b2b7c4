#include "tdp/quotsing.hpp"
#include "tdp/error.hpp"

#include <algorithm>

namespace tdp {

CyclicQuotSing normalize(const Integer& r, const Integer& a) {
  if (r < 1) throw Error(ErrorKind::InvalidGerm, "group order must be positive, got " + to_string(r));
  if (r == 1) return CyclicQuotSing::smooth();
  Integer weight = mod_floor(a, r);
  auto inverse = mod_inverse(weight, r);
  if (weight == 0 || !inverse) {
    throw Error(ErrorKind::InvalidGerm,
                "weight " + to_string(a) + " is not coprime to " + to_string(r));
  }
  return CyclicQuotSing(r, std::min(weight, *inverse));
}

HJChain hj_expansion(const Integer& r, const Integer& a) {
  HJChain chain;
  if (r == 1) return chain;
  if (a <= 0 || a >= r || gcd(a, r) != 1) {
    throw Error(ErrorKind::InvalidGerm, "expansion needs 0 < a < r coprime");
  }
  Integer num = r, den = a;
  for (;;) {
    Integer b = ceil_div(num, den);
    Integer rem = b * den - num;
    chain.push_back(std::move(b));
    if (rem == 0) break;
    num = std::move(den);
    den = std::move(rem);
  }
  return chain;
}

HJChain hj_expansion(const CyclicQuotSing& s) { return hj_expansion(s.r(), s.a()); }

std::pair<Integer, Integer> hj_fraction(std::span<const Integer> chain) {
  Integer p = 1, q = 0;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (*it < 2) throw Error(ErrorKind::InvalidChain, "entry " + to_string(*it) + " < 2");
    Integer next = *it * p - q;
    q = std::move(p);
    p = std::move(next);
  }
  return {p, q};
}

CyclicQuotSing from_hj(std::span<const Integer> chain) {
  auto [r, a] = hj_fraction(chain);
  return normalize(r, a);
}

namespace {

// For 1/(dn^2)(1, dna'-1) one has gcd(r, weight + 1) = dn exactly, so n and d
// are determined by the weight.
std::optional<TClassData> witness_for(const Integer& r, const Integer& weight) {
  Integer g = gcd(r, weight + 1);
  Integer n = r / g;
  if (g % n != 0) return std::nullopt;
  Integer d = g / n;
  return TClassData{d, n, (weight + 1) / g};
}

}  // namespace

std::optional<TClassData> t_data(const CyclicQuotSing& s) {
  if (s.is_smooth()) return TClassData{1, 1, 1};
  if (auto w = witness_for(s.r(), s.a())) return w;
  return witness_for(s.r(), *mod_inverse(s.a(), s.r()));
}

std::vector<TClassData> t_witnesses(const CyclicQuotSing& s) {
  std::vector<TClassData> out;
  if (s.is_smooth()) {
    out.push_back({1, 1, 1});
    return out;
  }
  for (const Integer& weight : {s.a(), *mod_inverse(s.a(), s.r())}) {
    if (auto w = witness_for(s.r(), weight)) {
      if (std::find(out.begin(), out.end(), *w) == out.end()) out.push_back(*w);
    }
  }
  std::sort(out.begin(), out.end(), [](const TClassData& x, const TClassData& y) {
    return x.n != y.n ? x.n < y.n : x.aprime < y.aprime;
  });
  return out;
}

bool wahl_chain_is_t(std::span<const Integer> chain) {
  for (const Integer& b : chain) {
    if (b < 2) throw Error(ErrorKind::InvalidChain, "entry " + to_string(b) + " < 2");
  }
  if (std::all_of(chain.begin(), chain.end(), [](const Integer& b) { return b == 2; })) {
    return true;
  }
  std::vector<Integer> c(chain.begin(), chain.end());
  std::size_t lo = 0, hi = c.size() - 1;
  // Undo the extension moves; at most one end can be a 2.
  while (lo < hi) {
    if (c[lo] == 2 && c[hi] >= 3) {
      ++lo;
      --c[hi];
    } else if (c[hi] == 2 && c[lo] >= 3) {
      --hi;
      --c[lo];
    } else {
      break;
    }
  }
  if (lo == hi) return c[lo] == 4;
  if (c[lo] != 3 || c[hi] != 3) return false;
  return std::all_of(c.begin() + lo + 1, c.begin() + hi, [](const Integer& b) { return b == 2; });
}

Integer gorenstein_index(const CyclicQuotSing& s) { return s.r() / gcd(s.r(), s.a() + 1); }

SingularityClass::SingularityClass(SmoothPoint p) : v_(p), milnor_(Integer(0)) {}

SingularityClass::SingularityClass(const CyclicQuotSing& s) {
  if (s.is_smooth()) {
    v_ = SmoothPoint{};
    milnor_ = Integer(0);
    return;
  }
  v_ = s;
  if (auto t = t_data(s)) milnor_ = t->d - 1;
}

SingularityClass::SingularityClass(DuValD d) : v_(d), milnor_(Integer(d.n)) {
  if (d.n < 4) throw Error(ErrorKind::InvalidGerm, "D_n needs n >= 4");
}

SingularityClass::SingularityClass(DuValE e) : v_(e), milnor_(Integer(e.n)) {
  if (e.n < 6 || e.n > 8) throw Error(ErrorKind::InvalidGerm, "E_n needs n in {6, 7, 8}");
}

SingularityClass SingularityClass::type_a(const Integer& rank) {
  return SingularityClass(normalize(rank + 1, rank));
}

bool SingularityClass::is_du_val() const {
  if (const auto* s = cyclic()) return s->is_du_val();
  return true;
}

std::string SingularityClass::label() const {
  struct Visitor {
    std::string operator()(const SmoothPoint&) const { return "smooth"; }
    std::string operator()(const DuValD& d) const { return "D" + std::to_string(d.n); }
    std::string operator()(const DuValE& e) const { return "E" + std::to_string(e.n); }
    std::string operator()(const CyclicQuotSing& s) const {
      if (s.is_du_val()) return "A" + to_string(Integer(s.r() - 1));
      return "1/" + to_string(s.r()) + "(1," + to_string(s.a()) + ")";
    }
  };
  return std::visit(Visitor{}, v_);
}

Integer milnor_number(const SingularityClass& c) {
  if (!c.cached_milnor()) throw Error(ErrorKind::NotTSingularity, c.label());
  return *c.cached_milnor();
}

ClassGroupDescriptor du_val_class_group(const SingularityClass& c) {
  struct Visitor {
    ClassGroupDescriptor operator()(const SmoothPoint&) const { return {}; }
    ClassGroupDescriptor operator()(const DuValD& d) const {
      if (d.n % 2 == 1) return {4};
      return {2, 2};
    }
    ClassGroupDescriptor operator()(const DuValE& e) const {
      if (e.n == 6) return {3};
      if (e.n == 7) return {2};
      return {};
    }
    ClassGroupDescriptor operator()(const CyclicQuotSing& s) const {
      if (!s.is_du_val()) throw Error(ErrorKind::NotDuVal, "1/" + to_string(s.r()) + "(1," + to_string(s.a()) + ")");
      return {s.r()};
    }
  };
  return std::visit(Visitor{}, c.variant());
}

}  // namespace tdp
