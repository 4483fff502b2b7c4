#include "tdp/corpus.hpp"
#include "tdp/error.hpp"
#include "tdp/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace tdp {

void validate(const CorpusConfig& cfg) {
  if (cfg.max_rays < 3) throw Error(ErrorKind::InvalidInput, "max_rays must be at least 3");
  if (cfg.coord_bound < 1) throw Error(ErrorKind::InvalidInput, "coord_bound must be at least 1");
  if (cfg.deformation_depth < 0 || cfg.deformation_depth > 2) {
    throw Error(ErrorKind::InvalidInput, "deformation depth must be 0, 1 or 2");
  }
}

unsigned worker_count(const CorpusConfig& cfg) {
  unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("TDP_THREADS")) {
    int c = std::atoi(cap);
    if (c >= 1) n = std::min(n, static_cast<unsigned>(c));
  }
  return n;
}

namespace {

struct Vec {
  long long x, y;
};

long long cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }

int half_plane(const Vec& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

// Strict left turn at b on the way a -> b -> c.
bool left_turn(const Vec& a, const Vec& b, const Vec& c) {
  return cross({b.x - a.x, b.y - a.y}, {c.x - b.x, c.y - b.y}) > 0;
}

template <class Fn>
void run_sharded(unsigned workers, std::size_t jobs, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs; ++j) fn(0u, j);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t j = w; j < jobs; j += workers) fn(w, j);
    });
  }
  for (auto& t : pool) t.join();
}

class FanSearch {
 public:
  explicit FanSearch(const CorpusConfig& cfg) : cfg_(cfg) {
    const long long b = cfg.coord_bound;
    for (long long x = -b; x <= b; ++x) {
      for (long long y = -b; y <= b; ++y) {
        if (std::gcd(x, y) == 1) prims_.push_back({x, y});
      }
    }
    std::sort(prims_.begin(), prims_.end(), [](const Vec& u, const Vec& v) {
      int hu = half_plane(u), hv = half_plane(v);
      return hu != hv ? hu < hv : cross(u, v) > 0;
    });
    const std::size_t n = prims_.size();
    cone_ok_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long long d = cross(prims_[i], prims_[j]);
        if (d <= 0) continue;
        bool ok = true;
        if (cfg.require_all_t && d > 1) {
          ok = SingularityClass(cone_singularity(lattice(i), lattice(j))).is_t();
        }
        cone_ok_[i * n + j] = ok ? 1 : 0;
      }
    }
  }

  std::size_t starts() const { return prims_.size(); }

  // Every admissible fan whose first ray (in angular order) is prims_[start].
  template <class Sink>
  void search_from(std::size_t start, Sink&& sink) const {
    std::vector<std::size_t> path{start};
    extend(path, sink);
  }

 private:
  LatticeVector lattice(std::size_t i) const { return {prims_[i].x, prims_[i].y}; }

  bool ok(std::size_t i, std::size_t j) const { return cone_ok_[i * prims_.size() + j] != 0; }

  template <class Sink>
  void extend(std::vector<std::size_t>& path, Sink& sink) const {
    const std::size_t last = path.back();
    const bool convex = cfg_.require_del_pezzo;
    if (path.size() >= 3) {
      const std::size_t first = path.front();
      if (ok(last, first) &&
          (!convex || (left_turn(prims_[path[path.size() - 2]], prims_[last], prims_[first]) &&
                       left_turn(prims_[last], prims_[first], prims_[path[1]])))) {
        emit(path, sink);
      }
    }
    if (static_cast<int>(path.size()) >= cfg_.max_rays) return;
    for (std::size_t next = last + 1; next < prims_.size(); ++next) {
      if (!ok(last, next)) continue;
      if (convex && path.size() >= 2 && !left_turn(prims_[path[path.size() - 2]], prims_[last], prims_[next])) continue;
      path.push_back(next);
      extend(path, sink);
      path.pop_back();
    }
  }

  template <class Sink>
  void emit(const std::vector<std::size_t>& path, Sink& sink) const {
    std::vector<LatticeVector> rays;
    rays.reserve(path.size());
    for (auto i : path) rays.push_back(lattice(i));
    Fan fan = fan_from_rays(std::move(rays));
    if (cfg_.require_del_pezzo && !is_del_pezzo(fan)) return;
    sink(std::move(fan));
  }

  const CorpusConfig& cfg_;
  std::vector<Vec> prims_;
  std::vector<char> cone_ok_;
};

using ClassMap = std::map<Fan, Fan>;  // canonical form -> least in-box representative

void merge_into(ClassMap& into, const Fan& key, const Fan& rep) {
  auto [it, inserted] = into.try_emplace(key, rep);
  if (!inserted && rep < it->second) it->second = rep;
}

}  // namespace

std::vector<Fan> corpus_fans(const CorpusConfig& cfg) {
  validate(cfg);
  FanSearch search(cfg);
  unsigned workers = worker_count(cfg);
  std::vector<ClassMap> shards(workers);
  run_sharded(workers, search.starts(), [&](unsigned w, std::size_t start) {
    search.search_from(start, [&](Fan fan) { merge_into(shards[w], unimodular_canonical_form(fan), fan); });
  });
  ClassMap all;
  for (auto& shard : shards) {
    for (auto& [key, rep] : shard) merge_into(all, key, rep);
  }
  std::vector<Fan> out;
  out.reserve(all.size());
  for (auto& [key, rep] : all) out.push_back(rep);
  return out;
}

namespace {

struct SurfaceLess {
  bool operator()(const SurfaceRecord& x, const SurfaceRecord& y) const {
    if (x.rho != y.rho) return x.rho < y.rho;
    if (x.k2 != y.k2) return x.k2 < y.k2;
    return x.singularities < y.singularities;
  }
};

// Distinct deformation records of rec up to the given depth, excluding rec.
std::vector<std::pair<SurfaceRecord, int>> deformation_tree(const SurfaceRecord& rec, int depth) {
  std::vector<std::pair<SurfaceRecord, int>> out;
  std::set<SurfaceRecord, SurfaceLess> seen{rec};
  std::vector<SurfaceRecord> level{rec};
  for (int d = 1; d <= depth; ++d) {
    std::vector<SurfaceRecord> next;
    for (const SurfaceRecord& parent : level) {
      for (auto& child : enumerate_deformations(parent)) {
        if (seen.insert(child).second) next.push_back(std::move(child));
      }
    }
    for (const auto& child : next) out.emplace_back(child, d);
    level = std::move(next);
  }
  return out;
}

}  // namespace

void generate_corpus(const CorpusConfig& cfg, const std::function<void(const CorpusItem&)>& sink) {
  for (const Fan& fan : corpus_fans(cfg)) {
    SurfaceRecord rec = record_from_fan(fan);
    sink(CorpusItem{&fan, rec, 0});
    if (cfg.deformation_depth == 0 || !rec.all_t()) continue;
    for (auto& [child, depth] : deformation_tree(rec, cfg.deformation_depth)) sink(CorpusItem{nullptr, child, depth});
  }
}

std::uint64_t VerificationReport::failed() const {
  return noether.failed + riemann_roch.failed + bound.failed + varsigma.failed + noether_preserved.failed;
}

namespace {

void tally(CheckTally& t, bool ok, VerificationReport& report, const char* check, const json& subject) {
  if (ok) {
    ++t.passed;
    return;
  }
  ++t.failed;
  report.failures.push_back({{"check", check}, {"record", subject}});
}

VerificationReport verify_fan(const Fan& fan, int depth) {
  VerificationReport report;
  report.fans = 1;
  ToricSurface surface(fan);
  json subject = surface_report_json(surface);
  tally(report.varsigma, varsigma_toric(fan) == 0, report, "varsigma", subject);
  if (!surface.all_t()) return report;

  tally(report.noether, *surface.noether_defect() == 0, report, "noether", subject);
  if (surface.del_pezzo() || is_nef_big(fan)) {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
      Integer count = anticanonical_point_count(fan, n, true);
      if (Rational(count) != Rational(n * (n + 1), 2) * surface.k2() + 1) ok = false;
    }
    tally(report.riemann_roch, ok, report, "riemann_roch", subject);
  }
  if (!surface.del_pezzo()) return report;

  SurfaceRecord rec = record_from_surface(surface);
  tally(report.bound, bound_report(rec).margin >= 0, report, "bound", subject);
  if (depth == 0) return report;

  Rational defect = rec.noether_defect();
  for (const auto& [child, d] : deformation_tree(rec, depth)) {
    ++report.deformation_records;
    json child_json = record_json(child);
    Rational child_defect = child.noether_defect();
    tally(report.noether_preserved, child_defect == defect, report, "noether_preserved", child_json);
    tally(report.noether, child_defect == 0, report, "noether", child_json);
    tally(report.bound, bound_report(child).margin >= 0, report, "bound", child_json);
  }
  return report;
}

void accumulate(CheckTally& into, const CheckTally& from) {
  into.passed += from.passed;
  into.failed += from.failed;
}

}  // namespace

VerificationReport verify_corpus(const CorpusConfig& cfg) {
  std::vector<Fan> fans = corpus_fans(cfg);
  std::vector<VerificationReport> parts(fans.size());
  run_sharded(worker_count(cfg), fans.size(),
              [&](unsigned, std::size_t i) { parts[i] = verify_fan(fans[i], cfg.deformation_depth); });
  VerificationReport total;
  for (const auto& p : parts) {
    total.fans += p.fans;
    total.deformation_records += p.deformation_records;
    accumulate(total.noether, p.noether);
    accumulate(total.riemann_roch, p.riemann_roch);
    accumulate(total.bound, p.bound);
    accumulate(total.varsigma, p.varsigma);
    accumulate(total.noether_preserved, p.noether_preserved);
    for (const auto& f : p.failures) total.failures.push_back(f);
  }
  return total;
}

}  // namespace tdp
