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

#include "instances.hpp"
#include "toruslab/clifford.hpp"
#include "toruslab/errors.hpp"

using namespace toruslab;
using namespace toruslab::testing;

namespace {

CliffordElement t_eps(const CliffordHandle& t, std::size_t k) {
  return CliffordElement::v(t, k, GroupElement(t->rank()), Scalar::one(t->field()));
}

CliffordElement zg(const CliffordHandle& t, const GroupElement& g) {
  return CliffordElement::z(t, g, Scalar::one(t->field()));
}

CliffordElement associator(const CliffordElement& a, const CliffordElement& b, const CliffordElement& c) {
  return clifford_mul(clifford_mul(a, b), c) - clifford_mul(a, clifford_mul(b, c));
}

}  // namespace

TEST(Triple, StandardIsValid) {
  const auto r = validate_triple(*standard_clifford_triple());
  EXPECT_TRUE(r.passed()) << r.detail;
}

TEST(Triple, SingleRepFailsProperness) {
  const CliffordTriple t(Subgroup::scaled(2, 2), {{0, 0}}, {sq("1")});
  const auto r = validate_triple(t);
  EXPECT_EQ(r.verdict, Verdict::fail);
  ASSERT_TRUE(r.witness);
  EXPECT_NE(r.witness->description.find("proper"), std::string::npos);
}

TEST(Triple, ThreeZ2FailsTwoG) {
  const CliffordTriple t(Subgroup::scaled(2, 3), {{0, 0}, {1, 0}, {0, 1}}, {sq("1"), sq("1")});
  const auto r = validate_triple(t);
  EXPECT_EQ(r.verdict, Verdict::fail);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->elements, (std::vector<GroupElement>{{2, 0}}));
}

TEST(Triple, ConstructionErrors) {
  EXPECT_THROW(CliffordTriple(Subgroup::scaled(2, 2), {{0, 0}, {1, 0}}, {}), ConstructionError);
  EXPECT_THROW(CliffordTriple(Subgroup::scaled(2, 2), {{0, 0}, {1, 0}}, {sq("0")}), ConstructionError);
  EXPECT_THROW(CliffordTriple(Subgroup::scaled(2, 2), {{0, 0}, {1, 0}, {0, 1}}, {sq("1")}), ConstructionError);
  EXPECT_THROW(CliffordTriple(Subgroup::scaled(2, 2), {{0, 0}, {1, 0}, {0, 1}}, {sq("1"), sw("w")}), ScalarError);
}

TEST(Bilinear, Examples) {
  const auto t = standard_clifford_triple();
  EXPECT_EQ(bilinear_f(t, 1, GroupElement{0, 0}, 1, GroupElement{0, 0}), zg(t, {2, 0}));
  EXPECT_TRUE(bilinear_f(t, 1, GroupElement{0, 0}, 2, GroupElement{0, 0}).is_zero());
  EXPECT_EQ(bilinear_f(t, 1, GroupElement{2, 0}, 1, GroupElement{0, 0}), zg(t, {4, 0}));
  EXPECT_EQ(bilinear_f(t, 2, GroupElement{0, 0}, 2, GroupElement{0, 0}), zg(t, {0, 2}).scaled(sq("-1")));
  EXPECT_THROW(bilinear_f(t, 0, GroupElement{0, 0}, 1, GroupElement{0, 0}), DecompositionError);
  EXPECT_THROW(bilinear_f(t, 3, GroupElement{0, 0}, 1, GroupElement{0, 0}), DecompositionError);
}

TEST(Mul, Examples) {
  const auto t = standard_clifford_triple();
  EXPECT_EQ(clifford_mul(zg(t, {2, 0}), zg(t, {0, -2})), zg(t, {2, -2}));
  EXPECT_EQ(clifford_mul(t_eps(t, 1), t_eps(t, 1)), zg(t, {2, 0}));
  const auto a = CliffordElement::v(t, 1, {2, 2}, sq("3"));
  const auto b = CliffordElement::v(t, 2, {0, -2}, sq("5"));
  EXPECT_TRUE(clifford_mul(a, b).is_zero());
  EXPECT_EQ(clifford_mul(CliffordElement::one(t), a), a);
  EXPECT_THROW(clifford_mul(a, CliffordElement::one(standard_clifford_triple())), HandleMismatchError);
}

TEST(Mul, NonHomogeneousSquare) {
  const auto t = standard_clifford_triple();
  const auto x = t_eps(t, 1) + t_eps(t, 2);
  EXPECT_EQ(clifford_mul(x, x), zg(t, {2, 0}) - zg(t, {0, 2}));
  EXPECT_THROW(clifford_invert(x), NotInvertibleError);
}

TEST(Grading, Components) {
  const auto t = standard_clifford_triple();
  const auto c0 = grading_component(*t, {2, -4});
  ASSERT_TRUE(c0);
  EXPECT_EQ(c0->rep, 0u);
  EXPECT_EQ(c0->gamma, (GroupElement{2, -4}));
  const auto c1 = grading_component(*t, {1, 2});
  ASSERT_TRUE(c1);
  EXPECT_EQ(c1->rep, 1u);
  EXPECT_EQ(c1->gamma, (GroupElement{0, 2}));
  EXPECT_FALSE(grading_component(*t, {1, 1}));
  EXPECT_THROW(CliffordElement::z(t, {1, 0}, sq("1")), DecompositionError);
}

// Property: sigma -> basis element is injective on S in the window, and the
// basis element carries degree sigma.
TEST(Property, GradingInjective) {
  const auto t = standard_clifford_triple();
  std::set<std::string> seen;
  for (const auto& s : window_points(2, 3)) {
    const auto h = CliffordElement::homogeneous(t, s);
    const bool in_s = floor_mod(s[0], 2) == 0 || floor_mod(s[1], 2) == 0;
    ASSERT_EQ(h.has_value(), in_s) << s;
    if (!h) continue;
    EXPECT_EQ(h->degrees(), std::vector<GroupElement>{s});
    EXPECT_TRUE(seen.insert(h->to_string()).second);
  }
}

// Property: J_s J_t = J_{s+t} when eps_s = eps_t or one of them is 0, and
// {0} when both are nonzero and different; commutative and unital.
TEST(Property, GradingLawExhaustive) {
  const auto t = standard_clifford_triple();
  std::vector<GroupElement> supp;
  for (const auto& s : window_points(2, 2))
    if (grading_component(*t, s)) supp.push_back(s);
  for (const auto& s : supp)
    for (const auto& u : supp) {
      const auto a = *CliffordElement::homogeneous(t, s), b = *CliffordElement::homogeneous(t, u);
      const auto ab = clifford_mul(a, b);
      EXPECT_EQ(ab, clifford_mul(b, a));
      const std::size_t es = grading_component(*t, s)->rep, eu = grading_component(*t, u)->rep;
      if (es != 0 && eu != 0 && es != eu) {
        EXPECT_TRUE(ab.is_zero()) << s << " " << u;
      } else {
        ASSERT_FALSE(ab.is_zero()) << s << " " << u;
        EXPECT_EQ(ab.degrees(), std::vector<GroupElement>{s + u});
      }
    }
}

// Property: every z^gamma associates and commutes with everything in the
// window; no z^gamma t_eps does.
TEST(Property, CenterIsZ) {
  const auto t = standard_clifford_triple();
  std::vector<CliffordElement> basis;
  for (const auto& s : window_points(2, 1))
    if (auto h = CliffordElement::homogeneous(t, s)) basis.push_back(*h);
  for (const auto& s : window_points(2, 2)) {
    const auto comp = grading_component(*t, s);
    if (!comp) continue;
    const auto x = *CliffordElement::homogeneous(t, s);
    bool nuclear = true;
    for (const auto& a : basis)
      for (const auto& b : basis)
        nuclear = nuclear && associator(x, a, b).is_zero() && associator(a, x, b).is_zero();
    EXPECT_EQ(nuclear, comp->rep == 0) << s;
  }
}

TEST(Property, HomogeneousInverse) {
  const auto t = standard_clifford_triple();
  for (const auto& s : window_points(2, 3)) {
    const auto h = CliffordElement::homogeneous(t, s);
    if (!h) continue;
    const auto x = h->scaled(sq("-2/3"));
    const auto inv = clifford_invert(x);
    EXPECT_EQ(clifford_mul(x, inv), CliffordElement::one(t));
    EXPECT_EQ(inv.degrees(), std::vector<GroupElement>{-s});
  }
  EXPECT_THROW(clifford_invert(CliffordElement(t)), ZeroElementError);
}
