#pragma once

// Exhaustive generation of toric surfaces from fans with bounded rays, and
// the verification harness run over them.

#include "tdp/qgdeform.hpp"
#include "tdp/toric.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace tdp {

struct CorpusConfig {
  int max_rays = 6;
  int coord_bound = 8;
  bool require_del_pezzo = true;
  bool require_all_t = true;
  int deformation_depth = 0;  // 0, 1 or 2
  unsigned threads = 0;       // 0: hardware concurrency capped by TDP_THREADS
};

/// Throws Error(InvalidInput) on max_rays < 3, coord_bound < 1 or a depth
/// outside 0..2.
void validate(const CorpusConfig& cfg);

/// Worker count: cfg.threads if set, else hardware concurrency, capped by the
/// TDP_THREADS environment variable.
unsigned worker_count(const CorpusConfig& cfg);

/// Fans with at most max_rays primitive rays in [-coord_bound, coord_bound]^2,
/// one per SL(2, Z) class, filtered per cfg. Each class is represented by its
/// least in-box ray list; the output is sorted by the class's canonical form.
std::vector<Fan> corpus_fans(const CorpusConfig& cfg);

struct CorpusItem {
  const Fan* fan;  // null for deformation records
  const SurfaceRecord& record;
  int depth;  // 0 for fan records
};

/// Streams every fan record followed, up to cfg.deformation_depth, by its
/// distinct deformation records.
void generate_corpus(const CorpusConfig& cfg, const std::function<void(const CorpusItem&)>& sink);

struct CheckTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct VerificationReport {
  std::uint64_t fans = 0;
  std::uint64_t deformation_records = 0;
  CheckTally noether;
  CheckTally riemann_roch;
  CheckTally bound;
  CheckTally varsigma;
  CheckTally noether_preserved;
  nlohmann::json failures = nlohmann::json::array();

  std::uint64_t failed() const;
};

/// Runs the checks on every corpus item:
///   noether       K^2 + rho + sum mu = 10 (all-T records)
///   riemann_roch  h^0(-nK) = n(n+1)K^2/2 + 1, n = 1..5 (all-T fans with -K nef and big)
///   bound         s <= rho + 2 (all-T del Pezzo fans and their deformations)
///   varsigma      varsigma = 0 for the invariant boundary (every fan)
///   noether_preserved  deformation keeps the Noether defect
VerificationReport verify_corpus(const CorpusConfig& cfg);

}  // namespace tdp
