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

#pragma once

#include <memory>
#include <random>
#include <vector>

#include "toruslab/albert.hpp"
#include "toruslab/assoc.hpp"
#include "toruslab/clifford.hpp"
#include "toruslab/jordan.hpp"

namespace toruslab::testing {

inline FieldDescriptor qw() { return FieldDescriptor::cyclotomic3(); }
inline Scalar sw(const char* text) { return parse_scalar(text, qw()); }
inline Scalar sq(const char* text) { return parse_scalar(text, FieldDescriptor::rational()); }

/// G = Z^4, Gamma = diag(3,3,3,1), Delta = <e1, e2, 3e3, e4>, sigma_i = e_i.
inline std::shared_ptr<const AlbertTriple> standard_albert_triple() {
  const std::int64_t g[] = {3, 3, 3, 1};
  const std::int64_t d[] = {1, 1, 3, 1};
  return std::make_shared<const AlbertTriple>(Subgroup::diagonal(d), Subgroup::diagonal(g),
                                              std::array<GroupElement, 3>{GroupElement{1, 0, 0, 0},
                                                                          GroupElement{0, 1, 0, 0},
                                                                          GroupElement{0, 0, 1, 0}});
}

/// n = 2, Gamma = 2Z^2, reps {0, e1, e2}, a_e1 = 1, a_e2 = -1.
inline CliffordHandle standard_clifford_triple() {
  return std::make_shared<const CliffordTriple>(Subgroup::scaled(2, 2),
                                                std::vector<GroupElement>{{0, 0}, {1, 0}, {0, 1}},
                                                std::vector<Scalar>{sq("1"), sq("-1")});
}

/// q_12 = w, q_21 = w^-1, all other entries 1.
inline CocyclePtr q_omega(std::size_t n) {
  return Cocycle::quantum(QuantumMatrix::single(n, 0, 1, Scalar::omega()));
}

/// Elementary quantum matrix q_12 = -1 on Z^2.
inline CocyclePtr elementary_minus_one() {
  return Cocycle::quantum(QuantumMatrix::single(2, 0, 1, Scalar::integer(FieldDescriptor::rational(), -1)));
}

/// q(s) = s1 s2 mod 2.
inline QuadraticMapF2 product_map() { return QuadraticMapF2::canonical({0, 0}, {{0, 1}, {0, 0}}); }

/// Bicharacter over Q(w) with lambda(e1, e2) = w and lambda(e2, e1) = w^2.
inline CocyclePtr extension_cocycle() {
  return Cocycle::bicharacter({{sw("1"), sw("w")}, {sw("w^2"), sw("1")}});
}

/// Entries drawn from {+-1, w, w^2, 2, 1/3}.
inline Scalar random_entry(std::mt19937_64& rng) {
  static const char* pool[] = {"1", "-1", "w", "w^2", "2", "1/3"};
  std::uniform_int_distribution<int> pick(0, 5);
  return sw(pool[pick(rng)]);
}

inline QuantumMatrix random_quantum_matrix(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<Scalar>> q(n, std::vector<Scalar>(n, sw("1")));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      q[i][j] = random_entry(rng);
      q[j][i] = q[i][j].inverse();
    }
  return QuantumMatrix(std::move(q));
}

inline Scalar random_small_scalar(const FieldDescriptor& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Scalar out(f, Rational(num(rng), den(rng)));
  if (f.is_extension()) out += Scalar(f, 0, Rational(num(rng), den(rng)));
  if (out.is_zero()) out = Scalar::one(f);
  return out;
}

inline GroupElement random_point(std::size_t n, std::int64_t bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> c(-bound, bound);
  GroupElement g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = c(rng);
  return g;
}

/// Random element of the assoc algebra with terms in the domain window.
inline AssocElement random_assoc(const CocyclePtr& alg, std::size_t terms, std::int64_t bound, std::mt19937_64& rng) {
  const auto& basis = alg->domain().basis();
  std::uniform_int_distribution<std::int64_t> c(-bound, bound);
  AssocElement out(alg);
  for (std::size_t t = 0; t < terms; ++t) {
    GroupElement g(alg->rank());
    for (const auto& b : basis) g += c(rng) * b;
    out.add_term(g, random_small_scalar(alg->field(), rng));
  }
  return out;
}

}  // namespace toruslab::testing
