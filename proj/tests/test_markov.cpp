#include "oracles.hpp"
#include "tdp/error.hpp"
#include "tdp/markov.hpp"

#include <gtest/gtest.h>

#include <set>

namespace tdp {
namespace {

using Triples = std::vector<MarkovTriple>;

Triples from_scan(const std::vector<std::array<std::int64_t, 3>>& scan) {
  Triples out;
  for (const auto& t : scan) out.push_back({t[0], t[1], t[2]});
  return out;
}

const MarkovEquation kFive = MarkovEquation::del_pezzo_five();
const MarkovEquation kClassical = MarkovEquation::classical();

TEST(Equation, SupportedFamilies) {
  EXPECT_NO_THROW(MarkovEquation(5, 5));
  EXPECT_NO_THROW(MarkovEquation(2, 2));
  EXPECT_NO_THROW(MarkovEquation(1, 3));
  EXPECT_THROW(MarkovEquation(2, 3), Error);
  EXPECT_THROW(MarkovEquation(0, 0), Error);
  EXPECT_TRUE(kClassical.fully_symmetric());
  EXPECT_FALSE(kFive.fully_symmetric());
}

TEST(Solution, Examples) {
  EXPECT_TRUE(is_solution(kFive, {1, 2, 1}));
  EXPECT_FALSE(is_solution(kFive, {1, 1, 1}));
  EXPECT_TRUE(is_solution(kClassical, {1, 1, 1}));
  EXPECT_TRUE(is_solution(kFive, {29, 3, 2}));
}

TEST(Mutate, Examples) {
  EXPECT_EQ(mutate(kFive, {1, 2, 1}, Coordinate::X), (MarkovTriple{9, 2, 1}));
  EXPECT_EQ(canonical(kFive, mutate(kFive, {1, 2, 1}, Coordinate::Y)), (MarkovTriple{1, 3, 1}));
  EXPECT_EQ(mutate(kFive, {1, 3, 1}, Coordinate::Z), (MarkovTriple{1, 3, 2}));
  EXPECT_THROW(mutate(kFive, {1, 1, 1}, Coordinate::X), Error);
}

TEST(Mutate, InvolutionAndSolutionPreserved) {
  for (const auto* eq : {&kFive, &kClassical}) {
    for (const auto& t : enumerate(*eq, 5000)) {
      for (Coordinate c : {Coordinate::X, Coordinate::Y, Coordinate::Z}) {
        // The conjugate root is (y^2 + k z^2) / x > 0, so every jump is defined.
        MarkovTriple u = mutate(*eq, t, c);
        EXPECT_TRUE(is_solution(*eq, u));
        EXPECT_EQ(mutate(*eq, u, c), t);
      }
    }
  }
}

TEST(Canonical, SortsFreeCoordinates) {
  EXPECT_EQ(canonical(kFive, {9, 2, 1}), (MarkovTriple{2, 9, 1}));
  EXPECT_EQ(canonical(kFive, {29, 3, 2}), (MarkovTriple{3, 29, 2}));
  EXPECT_EQ(canonical(kClassical, {5, 1, 2}), (MarkovTriple{1, 2, 5}));
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate(kClassical, 5), (Triples{{1, 1, 1}, {1, 1, 2}, {1, 2, 5}}));
  auto ten = enumerate(kFive, 10);
  EXPECT_EQ(ten, (Triples{{1, 2, 1}, {1, 3, 1}, {1, 3, 2}, {1, 7, 2}, {1, 7, 5}, {2, 9, 1}}));
  auto thirty = enumerate(kFive, 30);
  EXPECT_TRUE(std::binary_search(thirty.begin(), thirty.end(), canonical(kFive, {29, 3, 2})));
}

TEST(Enumerate, MatchesDirectScan) {
  for (int bound : {1, 10, 30, 200}) {
    EXPECT_EQ(enumerate(kFive, bound), from_scan(oracle::markov_scan(5, 5, bound, false))) << bound;
    EXPECT_EQ(enumerate(kClassical, bound), from_scan(oracle::markov_scan(1, 3, bound, true))) << bound;
  }
  MarkovEquation two(2, 2);
  EXPECT_EQ(enumerate(two, 200), from_scan(oracle::markov_scan(2, 2, 200, false)));
}

TEST(Enumerate, ClassicalMarkovNumbers) {
  std::set<Integer> numbers;
  for (const auto& t : enumerate(kClassical, 999)) {
    numbers.insert(t.a);
    numbers.insert(t.b);
    numbers.insert(t.c);
  }
  std::set<Integer> expected{1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985};
  EXPECT_EQ(numbers, expected);
}

TEST(Fundamental, Examples) {
  EXPECT_EQ(fundamental_solutions(kFive, 50), (Triples{{1, 2, 1}}));
  EXPECT_EQ(fundamental_solutions(kClassical, 50), (Triples{{1, 1, 1}}));
  EXPECT_TRUE(fundamental_solutions(kFive, 1).empty());
}

TEST(Weights, Examples) {
  EXPECT_EQ(triple_to_weights(kFive, {1, 2, 1}), (std::array<Integer, 3>{1, 4, 5}));
  EXPECT_EQ(triple_to_weights(kFive, {1, 3, 2}), (std::array<Integer, 3>{1, 9, 20}));
  EXPECT_EQ(triple_to_weights(kFive, {29, 3, 2}), (std::array<Integer, 3>{841, 9, 20}));
}

TEST(Weights, PairwiseCoprimeOnEnumeration) {
  for (const auto& t : enumerate(kFive, 2000)) {
    auto w = triple_to_weights(kFive, t);
    EXPECT_EQ(gcd(w[0], w[1]), 1);
    EXPECT_EQ(gcd(w[0], w[2]), 1);
    EXPECT_EQ(gcd(w[1], w[2]), 1);
  }
}

TEST(Weights, RejectsNonSolution) { EXPECT_THROW(triple_to_weights(kFive, {1, 1, 1}), Error); }

}  // namespace
}  // namespace tdp
