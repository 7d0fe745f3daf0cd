// Copyright 2026 The toruslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "toruslab/errors.hpp"
#include "toruslab/lattice.hpp"

using namespace toruslab;
using toruslab::testing::brute_force_classes;

namespace {

Subgroup diag(std::initializer_list<std::int64_t> d) {
  std::vector<std::int64_t> v(d);
  return Subgroup::diagonal(v);
}

std::set<std::vector<std::int64_t>> projections(const QuotientDescription& q, const std::vector<GroupElement>& xs) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& x : xs) out.insert(q.project(x));
  return out;
}

}  // namespace

TEST(Quotient, DiagonalAlbertGamma) {
  const auto q = snf_quotient(4, diag({3, 3, 3, 1}));
  EXPECT_EQ(q.torsion, (std::vector<std::int64_t>{3, 3, 3}));
  EXPECT_EQ(q.order(), std::optional<std::uint64_t>(27));
}

TEST(Quotient, TwoZ2) {
  const auto q = snf_quotient(2, Subgroup::scaled(2, 2));
  EXPECT_EQ(q.torsion, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(q.order(), std::optional<std::uint64_t>(4));
}

TEST(Quotient, SkewGeneratorsMatchBruteForce) {
  const std::vector<GroupElement> gens{{1, 1}, {1, -1}};
  const Subgroup h(2, gens);
  const auto q = snf_quotient(2, h);
  EXPECT_EQ(q.torsion, (std::vector<std::int64_t>{2}));
  const auto classes = brute_force_classes(gens, 2, 2, 4);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(q.order(), std::optional<std::uint64_t>(classes.size()));
}

TEST(Quotient, FreeSummand) {
  const Subgroup h(2, {{2, 0}});
  const auto q = snf_quotient(2, h);
  EXPECT_FALSE(q.finite());
  EXPECT_EQ(q.free_rank, 1u);
  EXPECT_THROW(coset_reps(2, h), InfiniteQuotientError);
}

TEST(Quotient, RankMismatch) { EXPECT_THROW(snf_quotient(3, Subgroup::scaled(2, 2)), DimensionError); }

TEST(CosetReps, OneDimensional) {
  EXPECT_EQ(coset_reps(1, Subgroup(1, {{3}})), (std::vector<GroupElement>{{0}, {1}, {2}}));
}

TEST(CosetReps, AlbertGamma) {
  const auto reps = coset_reps(4, diag({3, 3, 3, 1}));
  ASSERT_EQ(reps.size(), 27u);
  for (const auto& r : reps) {
    EXPECT_EQ(r[3], 0);
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(r[i] >= 0 && r[i] < 3);
  }
}

TEST(CosetReps, SkewGenerators) {
  EXPECT_EQ(coset_reps(2, Subgroup(2, {{1, 1}, {1, -1}})), (std::vector<GroupElement>{{0, 0}, {1, 0}}));
}

TEST(Subgroup, WholeAndTrivial) {
  EXPECT_TRUE(Subgroup::whole(3).contains(GroupElement{5, -7, 2}));
  EXPECT_FALSE(Subgroup::trivial(3).contains(GroupElement{0, 0, 1}));
  EXPECT_TRUE(Subgroup::trivial(3).contains(GroupElement(3)));
}

TEST(Subgroup, SolveConditions) {
  // x1 + x2 = 0 mod 3 and x3 = 0 over Z.
  const std::vector<LinearCondition> conds{{{1, 1, 0}, 3}, {{0, 0, 1}, 0}};
  const Subgroup h = solve_conditions(3, conds);
  for (const auto& x : window_points(3, 3)) {
    const bool expected = floor_mod(x[0] + x[1], 3) == 0 && x[2] == 0;
    EXPECT_EQ(h.contains(x), expected) << x;
  }
  EXPECT_EQ(solve_conditions(2, {}), Subgroup::whole(2));
}

TEST(Subgroup, WindowListsMembersOnly) {
  const Subgroup h(2, {{1, 1}, {1, -1}});
  const auto w = h.window(2);
  EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
  for (const auto& x : w) EXPECT_TRUE(h.contains(x));
}

// Property: for random subgroups with finite quotient, the number of reps is
// the product of the invariant factors, the reps are pairwise distinct in the
// quotient, and every window point is congruent to exactly one of them.
TEST(Property, CosetRepsAgreeWithSmithAndBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> c(-3, 3);
  int tried = 0;
  while (tried < 40) {
    std::vector<GroupElement> gens;
    for (int k = 0; k < 3; ++k) gens.push_back({c(rng), c(rng)});
    const Subgroup h(2, gens);
    const auto q = snf_quotient(2, h);
    if (!q.finite() || *q.order() > 20) continue;
    ++tried;
    std::uint64_t product = 1;
    for (auto d : q.torsion) product *= static_cast<std::uint64_t>(d);
    const auto reps = coset_reps(2, h);
    EXPECT_EQ(reps.size(), product);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(h.congruent(reps[i], reps[j]));
    EXPECT_EQ(projections(q, reps).size(), reps.size());
    for (const auto& x : window_points(2, 4)) {
      int hits = 0;
      for (const auto& r : reps) hits += h.congruent(x, r);
      EXPECT_EQ(hits, 1);
      EXPECT_EQ(q.project(x), q.project(h.reduce(x)));
      EXPECT_TRUE(h.congruent(x, h.reduce(x)));
    }
  }
}

TEST(Property, MembershipMatchesBruteForceSpan) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> c(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<GroupElement> gens{{c(rng), c(rng)}, {c(rng), c(rng)}};
    const Subgroup h(2, gens);
    const auto q = snf_quotient(2, h);
    if (!q.finite()) continue;
    // Differences of window points have entries up to 4 and the generator
    // matrix has entries up to 2, so Cramer's rule bounds the coefficients
    // of any difference lying in H by 16.
    const auto classes = brute_force_classes(gens, 2, 2, 16);
    for (const auto& cl : classes)
      for (const auto& x : cl) EXPECT_TRUE(h.congruent(x, cl.front()));
    std::set<std::vector<std::int64_t>> images;
    for (const auto& cl : classes) images.insert(q.project(cl.front()));
    EXPECT_EQ(images.size(), classes.size());
  }
}

TEST(Prs, CliffordStandardSet) {
  const CosetUnionSet s(Subgroup::scaled(2, 2), {{0, 0}, {1, 0}, {0, 1}});
  const auto r = prs_check(s, 2);
  EXPECT_TRUE(r.generates_group);
  EXPECT_TRUE(r.contains_zero);
  EXPECT_TRUE(r.closed_under_s_minus_2s);
  EXPECT_FALSE(r.window_verified);
}

TEST(Prs, LatticeAloneDoesNotGenerate) {
  const auto r = prs_check(CosetUnionSet(Subgroup::scaled(2, 2), {{0, 0}}), 2);
  EXPECT_FALSE(r.generates_group);
  EXPECT_TRUE(r.contains_zero);
}

TEST(Prs, WholeGroup) {
  EXPECT_TRUE(prs_check(CosetUnionSet(Subgroup::whole(2), {{0, 0}}), 2).ok());
}

TEST(Prs, MissingReflectionHasWitness) {
  // e1 - 2 e2 = (1, 2) mod 4 is not a rep.
  const CosetUnionSet s(Subgroup::scaled(2, 4), {{0, 0}, {1, 0}, {0, 1}});
  const auto r = prs_check(s, 2);
  EXPECT_FALSE(r.closed_under_s_minus_2s);
  ASSERT_TRUE(r.closure_witness_s && r.closure_witness_t);
  EXPECT_FALSE(s.contains(*r.closure_witness_s - 2 * *r.closure_witness_t));
}

// Property: closed-form coset check agrees with the windowed finite-set check.
TEST(Property, PrsClosedFormAgreesWithWindow) {
  const std::vector<std::vector<GroupElement>> rep_sets{
      {{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  for (const auto& reps : rep_sets) {
    const CosetUnionSet s(Subgroup::scaled(2, 2), reps);
    const auto closed = prs_check(s, 2);
    for (std::int64_t b = 2; b <= 4; ++b) {
      std::vector<GroupElement> pts;
      for (const auto& x : window_points(2, b))
        if (s.contains(x)) pts.push_back(x);
      const auto win = prs_check(pts, 2, b);
      EXPECT_TRUE(win.window_verified);
      EXPECT_EQ(win.contains_zero, closed.contains_zero);
      EXPECT_EQ(win.closed_under_s_minus_2s, closed.closed_under_s_minus_2s);
      EXPECT_EQ(win.generates_group, closed.generates_group);
    }
  }
}

TEST(Quadratic, ProductMap) {
  const auto q = QuadraticMapF2::canonical({0, 0}, {{0, 1}, {0, 0}});
  const auto r = quadratic_map_check(q, 2);
  EXPECT_TRUE(r.biadditive);
  for (const auto& x : window_points(2, 3)) EXPECT_EQ(q(x), floor_mod(x[0] * x[1], 2));
}

TEST(Quadratic, ZeroAndLinear) {
  EXPECT_TRUE(quadratic_map_check(QuadraticMapF2::zero(3), 1).biadditive);
  const auto lin = QuadraticMapF2::from_function(2, [](const GroupElement& s) { return int(floor_mod(s[0], 2)); });
  EXPECT_TRUE(quadratic_map_check(lin, 2).biadditive);
}

TEST(Quadratic, CubicTermIsRejected) {
  // q(s) = [s1 mod 3 == 1] is not quadratic over F_2.
  const auto bad =
      QuadraticMapF2::from_function(1, [](const GroupElement& s) { return int(floor_mod(s[0], 3) == 1); });
  const auto r = quadratic_map_check(bad, 2);
  EXPECT_FALSE(r.biadditive);
  ASSERT_TRUE(r.witness_s && r.witness_t && r.witness_d);
  const auto& s = *r.witness_s;
  const auto& t = *r.witness_t;
  const auto& d = *r.witness_d;
  EXPECT_NE(bad.beta(s + t, d), (bad.beta(s, d) + bad.beta(t, d)) % 2);
}

// Property: beta_q(s, s) = 0 forces q(2s) = 0 and q(m s) = q(s) for odd m.
TEST(Property, QuadraticOddMultiples) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto q = QuadraticMapF2::canonical({bit(rng), bit(rng), bit(rng)},
                                             {{0, bit(rng), bit(rng)}, {0, 0, bit(rng)}, {0, 0, 0}});
    ASSERT_TRUE(quadratic_map_check(q, 1).biadditive);
    for (const auto& s : window_points(3, 2)) {
      if (q.beta(s, s) != 0) continue;
      EXPECT_EQ(q(2 * s), 0);
      for (std::int64_t m = 1; m <= 5; m += 2) EXPECT_EQ(q(m * s), q(s));
    }
  }
}
