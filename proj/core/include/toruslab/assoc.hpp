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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toruslab/errors.hpp"
#include "toruslab/lattice.hpp"
#include "toruslab/report.hpp"
#include "toruslab/scalars.hpp"

namespace toruslab {

/// n x n matrix with q_ii = 1 and q_ij q_ji = 1, checked on construction.
class QuantumMatrix {
 public:
  explicit QuantumMatrix(std::vector<std::vector<Scalar>> entries);
  /// Identity-of-ones matrix over f (the untwisted group algebra).
  static QuantumMatrix trivial(std::size_t n, const FieldDescriptor& f);
  /// Only q_12 = value (and q_21 = value^-1) differ from 1.
  static QuantumMatrix single(std::size_t n, std::size_t i, std::size_t j, const Scalar& value);

  std::size_t size() const { return q_.size(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return q_[i][j]; }
  const FieldDescriptor& field() const { return q_.front().front().field(); }
  bool elementary() const;

 private:
  std::vector<std::vector<Scalar>> q_;
};

using PairKey = std::pair<GroupElement, GroupElement>;

/// A normalized 2-cocycle lambda: G x G -> F^x on a subgroup G of Z^n
/// (the domain; Z^n unless stated otherwise).
class Cocycle {
 public:
  enum class Kind { quantum, bicharacter, albert, table, function };
  using Evaluator = std::function<Scalar(const GroupElement&, const GroupElement&)>;

  /// Normal-ordered cocycle of the ordered monomial basis
  /// y^s = y_1^{s_1} ... y_n^{s_n}: lambda(s, t) = prod_{i>j} q_ij^{s_i t_j}.
  static std::shared_ptr<const Cocycle> quantum(const QuantumMatrix& q);
  /// lambda(s, t) = prod_{i,j} b_ij^{s_i t_j}.
  static std::shared_ptr<const Cocycle> bicharacter(std::vector<std::vector<Scalar>> b);
  static std::shared_ptr<const Cocycle> trivial(std::size_t n, const FieldDescriptor& f);
  /// Finite explicit table; evaluation outside the table throws.
  static std::shared_ptr<const Cocycle> table(std::size_t n, const FieldDescriptor& f,
                                              std::map<PairKey, Scalar> entries);
  static std::shared_ptr<const Cocycle> function(Kind kind, std::size_t n, const FieldDescriptor& f,
                                                 Subgroup domain, Evaluator fn, std::string label);
  /// Basis change y^s = d(s) x^s: d(s) d(t) d(s+t)^-1 lambda(s, t).
  static std::shared_ptr<const Cocycle> coboundary_twist(std::shared_ptr<const Cocycle> base,
                                                         std::function<Scalar(const GroupElement&)> d);
  /// Same values except lambda(s, t) *= factor at one pair.
  static std::shared_ptr<const Cocycle> perturbed(std::shared_ptr<const Cocycle> base, const GroupElement& s,
                                                  const GroupElement& t, const Scalar& factor);

  Kind kind() const { return kind_; }
  std::size_t rank() const { return rank_; }
  const FieldDescriptor& field() const { return field_; }
  const Subgroup& domain() const { return domain_; }
  const std::string& label() const { return label_; }
  /// Present for quantum kind.
  const std::optional<QuantumMatrix>& quantum_matrix() const { return quantum_; }
  /// b_ij for quantum and bicharacter kinds.
  const std::vector<std::vector<Scalar>>& bicharacter_matrix() const { return bichar_; }
  const std::map<PairKey, Scalar>& table_entries() const { return table_; }

  /// cocycle_eval. Throws DimensionError on rank mismatch.
  Scalar operator()(const GroupElement& s, const GroupElement& t) const;
  /// False when the pair lies outside the domain (or outside a table).
  bool defined(const GroupElement& s, const GroupElement& t) const;

 private:
  Cocycle() = default;
  Scalar eval_bicharacter(const GroupElement& s, const GroupElement& t) const;

  Kind kind_ = Kind::function;
  std::size_t rank_ = 0;
  FieldDescriptor field_ = FieldDescriptor::rational();
  Subgroup domain_;
  std::string label_;
  std::optional<QuantumMatrix> quantum_;
  std::vector<std::vector<Scalar>> bichar_;
  std::vector<std::vector<long>> bichar_order_;  // 0 = not a root of unity
  std::map<PairKey, Scalar> table_;
  Evaluator fn_;
};

using CocyclePtr = std::shared_ptr<const Cocycle>;

/// lambda(s, t) lambda(t, s)^-1.
Scalar commutation_factor(const Cocycle& c, const GroupElement& s, const GroupElement& t);

/// Checks lambda(s+t, d) lambda(s, t) = lambda(s, t+d) lambda(t, d) for all
/// s, t, d in the domain window of radius bound (coefficients over the domain
/// basis). Above sample_cap triples a seeded sample is drawn. Table cocycles
/// are checked on triples whose four values are present.
CheckReport cocycle_identity_check(const Cocycle& c, std::int64_t bound,
                                   std::uint64_t sample_cap = 4'000'000, std::uint64_t seed = 0x5eed);

/// Element of the twisted group algebra (F^t[G], lambda): a finite sparse map
/// G -> F with no stored zeros.
class AssocElement {
 public:
  using Terms = std::map<GroupElement, Scalar>;

  explicit AssocElement(CocyclePtr algebra);
  static AssocElement monomial(CocyclePtr algebra, const GroupElement& s, const Scalar& c);
  /// x^s.
  static AssocElement basis(CocyclePtr algebra, const GroupElement& s);
  static AssocElement one(CocyclePtr algebra);
  static AssocElement constant(CocyclePtr algebra, const Scalar& c);

  const CocyclePtr& handle() const { return algebra_; }
  const Cocycle& algebra() const { return *algebra_; }
  const FieldDescriptor& field() const { return algebra_->field(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const { return terms_.size() == 1; }
  /// Degree of a single-term element.
  const GroupElement& degree() const;
  Scalar coefficient(const GroupElement& s) const;
  void add_term(const GroupElement& s, const Scalar& c);

  AssocElement& operator+=(const AssocElement& o);
  AssocElement& operator-=(const AssocElement& o);
  friend AssocElement operator+(AssocElement a, const AssocElement& b) { return a += b; }
  friend AssocElement operator-(AssocElement a, const AssocElement& b) { return a -= b; }
  AssocElement operator-() const;
  AssocElement scaled(const Scalar& c) const;
  AssocElement scaled(const Rational& r) const;
  friend AssocElement operator*(const AssocElement& a, const AssocElement& b);
  friend bool operator==(const AssocElement& a, const AssocElement& b);

  std::string to_string() const;

 private:
  void require_same(const AssocElement& o) const;
  CocyclePtr algebra_;
  Terms terms_;
};

/// Bilinear extension of x^s x^t = lambda(s, t) x^{s+t}.
AssocElement assoc_mul(const AssocElement& a, const AssocElement& b);
/// ab - ba.
AssocElement commutator(const AssocElement& a, const AssocElement& b);
/// (c x^s)^-1 = (c lambda(s, -s))^-1 x^{-s}. Throws ZeroElementError or
/// NotInvertibleError for zero or non-homogeneous input.
AssocElement invert_homogeneous(const AssocElement& a);

/// {s : lambda_t(s, b) = 1 for every domain basis vector b}, computed exactly
/// from the exponent lattice of the commutation factors on basis pairs.
/// Throws UnsupportedScalarError if a factor is not of the form +-w^a r.
Subgroup central_grading_group(const Cocycle& c);

/// Windowed cross-check of a claimed central grading group: every gamma in
/// the window commutes with every windowed basis element, and every windowed
/// s outside gamma fails to commute with some domain basis vector.
CheckReport centrality_cross_check(const Cocycle& c, const Subgroup& gamma, std::int64_t bound);

/// Violated compatibility condition with the offending pair.
class CompatibilityError : public ConstructionError {
 public:
  CompatibilityError(const std::string& what, GroupElement s, GroupElement t)
      : ConstructionError(what), first(std::move(s)), second(std::move(t)) {}
  GroupElement first;
  GroupElement second;
};

/// A graded involution of (F^t[G], lambda): either theta_q(x^s) = (-1)^{q(s)} x^s
/// or, over a quadratic extension E, the conjugate-semilinear anti-automorphism
/// fixing every x^s.
class GradedInvolution {
 public:
  /// Validates (-1)^{beta_q(b_k, b_l)} = lambda_t(b_k, b_l) on domain basis
  /// pairs; both sides are biadditive so basis pairs suffice. Throws
  /// CompatibilityError with the violating pair.
  static GradedInvolution from_quadratic_map(CocyclePtr c, QuadraticMapF2 q);
  /// Requires conj(lambda(g1, g2)) = lambda(g2, g1); checked on basis pairs,
  /// plus a radius-1 window for cocycles that are not bicharacters.
  static GradedInvolution semilinear(CocyclePtr c);

  const CocyclePtr& handle() const { return cocycle_; }
  bool is_semilinear() const { return semilinear_; }
  const QuadraticMapF2& quadratic_map() const { return q_; }

  /// involution_apply.
  AssocElement apply(const AssocElement& a) const;
  bool is_fixed(const AssocElement& a) const { return apply(a) == a; }
  /// Basis of the fixed points over the base field inside the domain window.
  std::vector<AssocElement> hermitian_part_basis(std::int64_t bound) const;
  /// Whether x^s is fixed (false means theta(x^s) = -x^s).
  bool fixes_basis(const GroupElement& s) const;

 private:
  GradedInvolution(CocyclePtr c, QuadraticMapF2 q, bool semilinear)
      : cocycle_(std::move(c)), q_(std::move(q)), semilinear_(semilinear) {}
  CocyclePtr cocycle_;
  QuadraticMapF2 q_;
  bool semilinear_ = false;
};

/// theta(theta(a)) = a and theta(ab) = theta(b) theta(a) for basis elements
/// of the window (with a generator coefficient on the left factor for
/// semilinear involutions), and products of fixed basis elements under
/// a . b = (ab + ba) / 2 stay fixed.
CheckReport involution_check(const GradedInvolution& theta, std::int64_t bound);

}  // namespace toruslab
