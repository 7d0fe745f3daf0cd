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

#include "instances.hpp"
#include "toruslab/errors.hpp"
#include "toruslab/scalars.hpp"

using namespace toruslab;
using toruslab::testing::random_small_scalar;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rational();
const FieldDescriptor kW = FieldDescriptor::cyclotomic3();

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/-4"), Rational(-3, 2));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(Field, QuadraticRejectsSquares) {
  EXPECT_THROW(FieldDescriptor::quadratic(Rational(4)), ScalarError);
  EXPECT_THROW(FieldDescriptor::quadratic(Rational(9, 4)), ScalarError);
  EXPECT_THROW(FieldDescriptor::quadratic(Rational(0)), ScalarError);
  EXPECT_NO_THROW(FieldDescriptor::quadratic(Rational(2)));
}

TEST(Scalar, OmegaRelation) {
  const Scalar w = Scalar::omega();
  EXPECT_TRUE((Scalar::one(kW) + w + w * w).is_zero());
  EXPECT_EQ(w.pow(3), Scalar::one(kW));
  EXPECT_EQ(w.inverse(), w * w);
}

TEST(Scalar, Conjugate) {
  EXPECT_EQ(Scalar::omega().conjugate(), parse_scalar("-1-w", kW));
  EXPECT_EQ(Scalar::integer(kQ, 5).conjugate(), Scalar::integer(kQ, 5));
  const auto f2 = FieldDescriptor::quadratic(Rational(2));
  EXPECT_EQ(parse_scalar("1+s", f2).conjugate(), parse_scalar("1-s", f2));
}

TEST(Scalar, RootsOfUnity) {
  EXPECT_EQ(is_root_of_unity(Scalar::omega()), std::optional<int>(3));
  EXPECT_EQ(is_root_of_unity(Scalar::integer(kQ, -1)), std::optional<int>(2));
  EXPECT_EQ(is_root_of_unity(-Scalar::omega()), std::optional<int>(6));
  EXPECT_EQ(is_root_of_unity(Scalar::integer(kQ, 2)), std::nullopt);
  EXPECT_EQ(is_root_of_unity(Scalar::one(kQ)), std::optional<int>(1));
}

TEST(Scalar, FactorExponents) {
  const auto f = factor_exponents(parse_scalar("-4/3*w", kW));
  EXPECT_EQ(f.sign, 1);
  EXPECT_EQ(f.omega_exp, 1);
  EXPECT_EQ(f.primes, (std::map<mpz_class, int>{{2, 2}, {3, -1}}));
  EXPECT_EQ(f.reconstruct(kW), parse_scalar("-4/3*w", kW));

  const auto one = factor_exponents(Scalar::one(kQ));
  EXPECT_EQ(one.sign, 0);
  EXPECT_EQ(one.omega_exp, 0);
  EXPECT_TRUE(one.primes.empty());

  const auto w2 = factor_exponents(parse_scalar("w^2", kW));
  EXPECT_EQ(w2.sign, 0);
  EXPECT_EQ(w2.omega_exp, 2);

  EXPECT_THROW(factor_exponents(parse_scalar("1+2*w", kW)), UnsupportedScalarError);
  EXPECT_THROW(factor_exponents(Scalar::zero(kQ)), UnsupportedScalarError);
}

TEST(Scalar, FieldsNeverMix) {
  EXPECT_THROW(Scalar::one(kQ) + Scalar::omega(), ScalarError);
  EXPECT_EQ(embed(Scalar::integer(kQ, 2), kW) + Scalar::omega(), parse_scalar("2+w", kW));
  EXPECT_THROW(embed(Scalar::omega(), kQ), ScalarError);
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(Scalar::zero(kW).inverse(), DivisionByZeroError);
  EXPECT_THROW(Scalar::one(kQ) / Scalar::zero(kQ), DivisionByZeroError);
}

TEST(Scalar, ParseErrors) {
  EXPECT_THROW(parse_scalar("w", kQ), ScalarError);
  EXPECT_THROW(parse_scalar("s", kW), ScalarError);
  EXPECT_THROW(parse_scalar("1+", kQ), ScalarError);
  EXPECT_EQ(parse_scalar("w^-1", kW), parse_scalar("w^2", kW));
  EXPECT_EQ(parse_scalar("-3/4", kQ), Scalar(kQ, Rational(-3, 4)));
}

class FieldAxioms : public ::testing::TestWithParam<int> {
 protected:
  FieldDescriptor field() const {
    switch (GetParam()) {
      case 0: return kQ;
      case 1: return kW;
      case 2: return FieldDescriptor::quadratic(Rational(2));
      default: return FieldDescriptor::quadratic(Rational(-5, 3));
    }
  }
};

// Property: field axioms, conjugation automorphism and text round trip on
// random samples, all exact.
TEST_P(FieldAxioms, RandomSamples) {
  const FieldDescriptor f = field();
  std::mt19937_64 rng(100 + GetParam());
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar x = random_small_scalar(f, rng), y = random_small_scalar(f, rng), z = random_small_scalar(f, rng);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * x.inverse(), Scalar::one(f));
    EXPECT_EQ((x - y) + y, x);
    EXPECT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
    EXPECT_EQ((x + y).conjugate(), x.conjugate() + y.conjugate());
    EXPECT_EQ(x.conjugate().conjugate(), x);
    EXPECT_EQ(embed(x.norm(), f), x * x.conjugate());
    EXPECT_EQ(x.conjugate() == x, x.is_rational());
    EXPECT_EQ(parse_scalar(x.to_string(), f), x);
  }
}

INSTANTIATE_TEST_SUITE_P(AllFields, FieldAxioms, ::testing::Values(0, 1, 2, 3));

// Property: factor_exponents reconstructs its input for every +-w^a r.
TEST(Property, FactorRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(1, 40), den(1, 40), sign(0, 1), a(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar x = Scalar(kW, Rational(num(rng), den(rng))) * Scalar::omega().pow(a(rng));
    if (sign(rng)) x = -x;
    EXPECT_EQ(factor_exponents(x).reconstruct(kW), x);
  }
}
