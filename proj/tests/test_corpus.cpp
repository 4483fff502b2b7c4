#include "tdp/corpus.hpp"
#include "tdp/error.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

namespace tdp {
namespace {

CorpusConfig small(int rays, int bound) {
  CorpusConfig cfg;
  cfg.max_rays = rays;
  cfg.coord_bound = bound;
  return cfg;
}

std::set<Fan> canonical_set(const std::vector<Fan>& fans) {
  std::set<Fan> out;
  for (const auto& f : fans) out.insert(unimodular_canonical_form(f));
  return out;
}

/// Every subset of in-box primitive vectors of size 3..max_rays that forms a
/// complete fan, filtered like the corpus, as canonical forms.
std::set<Fan> subset_oracle(const CorpusConfig& cfg) {
  std::vector<LatticeVector> prim;
  for (int x = -cfg.coord_bound; x <= cfg.coord_bound; ++x) {
    for (int y = -cfg.coord_bound; y <= cfg.coord_bound; ++y) {
      if (gcd(x, y) == 1) prim.push_back({x, y});
    }
  }
  std::set<Fan> out;
  const std::size_t n = prim.size();
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (idx.size() >= 3) {
      std::vector<LatticeVector> rays;
      for (auto i : idx) rays.push_back(prim[i]);
      try {
        Fan f = fan_from_rays(rays);
        ToricSurface s(f);
        if ((!cfg.require_del_pezzo || s.del_pezzo()) && (!cfg.require_all_t || s.all_t())) {
          out.insert(unimodular_canonical_form(f));
        }
      } catch (const Error&) {
      }
    }
    if (static_cast<int>(idx.size()) == cfg.max_rays) return;
    for (std::size_t i = from; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

TEST(Config, Validation) {
  EXPECT_THROW(validate(small(2, 3)), Error);
  EXPECT_THROW(validate(small(4, 0)), Error);
  CorpusConfig deep = small(4, 2);
  deep.deformation_depth = 3;
  EXPECT_THROW(validate(deep), Error);
  EXPECT_NO_THROW(validate(small(3, 1)));
}

TEST(Corpus, TrianglesInSmallBox) {
  auto fans = corpus_fans(small(3, 2));
  auto keys = canonical_set(fans);
  EXPECT_TRUE(keys.count(unimodular_canonical_form(wps_fan(1, 1, 1))));
  EXPECT_TRUE(keys.count(unimodular_canonical_form(wps_fan(1, 1, 2))));
}

TEST(Corpus, ContainsProductOfLines) {
  auto fans = corpus_fans(small(4, 2));
  Fan quadric = fan_from_rays({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  auto keys = canonical_set(fans);
  ASSERT_TRUE(keys.count(unimodular_canonical_form(quadric)));
  EXPECT_EQ(k_squared(quadric), 8);
  EXPECT_EQ(picard_rank(quadric), 2);
}

TEST(Corpus, MatchesSubsetOracle) {
  for (auto [rays, bound] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{4, 3}}) {
    CorpusConfig cfg = small(rays, bound);
    EXPECT_EQ(canonical_set(corpus_fans(cfg)), subset_oracle(cfg)) << rays << " " << bound;
    cfg.require_del_pezzo = false;
    cfg.require_all_t = false;
    EXPECT_EQ(canonical_set(corpus_fans(cfg)), subset_oracle(cfg)) << rays << " " << bound << " unfiltered";
  }
}

TEST(Corpus, NoDuplicateClassesAndStableUnderTransforms) {
  auto fans = corpus_fans(small(5, 4));
  EXPECT_EQ(canonical_set(fans).size(), fans.size());
  std::mt19937_64 rng(41);
  for (const auto& f : fans) {
    EXPECT_TRUE(is_del_pezzo(f));
    EXPECT_TRUE(ToricSurface(f).all_t());
    for (const auto& v : f.rays()) {
      EXPECT_LE(abs(v.x), 4);
      EXPECT_LE(abs(v.y), 4);
    }
    Matrix2 m{1, 0, 0, 1};
    for (int i = 0; i < 4; ++i) {
      int k = static_cast<int>(rng() % 5) - 2;
      m = m * ((rng() % 2) ? Matrix2{1, k, 0, 1} : Matrix2{1, 0, k, 1});
    }
    EXPECT_EQ(unimodular_canonical_form(transform(f, m)), unimodular_canonical_form(f));
  }
}

TEST(Corpus, DeterministicAcrossThreadCounts) {
  CorpusConfig one = small(5, 4);
  one.threads = 1;
  CorpusConfig four = one;
  four.threads = 4;
  EXPECT_EQ(corpus_fans(one), corpus_fans(four));
}

TEST(Corpus, GenerateStreamsFansThenDeformations) {
  CorpusConfig cfg = small(4, 3);
  cfg.deformation_depth = 1;
  std::size_t fans = 0, deformed = 0;
  generate_corpus(cfg, [&](const CorpusItem& item) {
    if (item.fan) {
      ++fans;
      EXPECT_EQ(item.depth, 0);
    } else {
      ++deformed;
      EXPECT_EQ(item.depth, 1);
      EXPECT_EQ(item.record.noether_defect(), 0);
    }
  });
  EXPECT_EQ(fans, corpus_fans(cfg).size());
  EXPECT_GT(deformed, 0u);
}

TEST(Verify, SmallCorpusPasses) {
  CorpusConfig cfg = small(5, 4);
  cfg.deformation_depth = 1;
  VerificationReport r = verify_corpus(cfg);
  EXPECT_EQ(r.failed(), 0u) << r.failures.dump();
  EXPECT_EQ(r.fans, corpus_fans(cfg).size());
  EXPECT_EQ(r.noether.passed, r.fans + r.deformation_records);
  EXPECT_EQ(r.varsigma.passed, r.fans);
  EXPECT_EQ(r.riemann_roch.passed, r.fans);
  EXPECT_GT(r.noether_preserved.passed, 0u);
}

TEST(Verify, UnfilteredCorpusHasNoFalseFailures) {
  CorpusConfig cfg = small(4, 3);
  cfg.require_del_pezzo = false;
  cfg.require_all_t = false;
  VerificationReport r = verify_corpus(cfg);
  EXPECT_EQ(r.failed(), 0u) << r.failures.dump();
  EXPECT_GT(r.fans, r.noether.passed);
}

}  // namespace
}  // namespace tdp
