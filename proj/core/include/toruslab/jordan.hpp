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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "toruslab/albert.hpp"
#include "toruslab/assoc.hpp"
#include "toruslab/clifford.hpp"
#include "toruslab/report.hpp"

namespace toruslab {

class JordanView;
using JordanHandle = std::shared_ptr<const JordanView>;

/// Element of a Jordan view; the representation matches the view kind.
class JordanElement {
 public:
  using Rep = std::variant<AssocElement, CliffordElement, AlbertElement>;

  JordanElement(JordanHandle view, Rep rep);

  const JordanHandle& view() const { return view_; }
  const Rep& rep() const { return rep_; }
  const AssocElement& assoc() const { return std::get<AssocElement>(rep_); }
  const CliffordElement& clifford() const { return std::get<CliffordElement>(rep_); }
  const AlbertElement& albert() const { return std::get<AlbertElement>(rep_); }

  bool is_zero() const;
  std::vector<GroupElement> degrees() const;
  bool is_homogeneous() const { return degrees().size() == 1; }

  JordanElement& operator+=(const JordanElement& o);
  JordanElement& operator-=(const JordanElement& o);
  friend JordanElement operator+(JordanElement a, const JordanElement& b) { return a += b; }
  friend JordanElement operator-(JordanElement a, const JordanElement& b) { return a -= b; }
  JordanElement scaled(const Rational& r) const;
  friend bool operator==(const JordanElement& a, const JordanElement& b);
  std::string to_string() const;

 private:
  void require_same(const JordanElement& o) const;
  JordanHandle view_;
  Rep rep_;
};

/// A Jordan algebra graded by Z^n with at most one-dimensional components.
class JordanView : public std::enable_shared_from_this<JordanView> {
 public:
  enum class Kind { plus, hermitian, clifford, albert };

  /// A^+ with a . b = (ab + ba) / 2.
  static JordanHandle plus(CocyclePtr c, std::string type_tag = "plus");
  /// H(A, theta) with the same product.
  static JordanHandle hermitian(GradedInvolution theta, std::string type_tag = "involution");
  static JordanHandle clifford(CliffordHandle t);
  static JordanHandle albert(AlbertHandle t);

  Kind kind() const { return kind_; }
  const std::string& type_tag() const { return tag_; }
  std::size_t rank() const;
  /// Field of the coefficients in the representation.
  const FieldDescriptor& field() const;
  const CocyclePtr& assoc_handle() const { return cocycle_; }
  const std::optional<GradedInvolution>& involution() const { return theta_; }
  const CliffordHandle& clifford_handle() const { return clifford_; }
  const AlbertHandle& albert_handle() const { return albert_; }

  JordanElement zero() const;
  JordanElement one() const;
  JordanElement wrap(JordanElement::Rep rep) const;
  /// Chosen basis vector of J^sigma, or nullopt when sigma is not in the support.
  std::optional<JordanElement> basis_element(const GroupElement& sigma) const;
  /// Support points inside the window [-bound, bound]^n, sorted.
  std::vector<GroupElement> support_window(std::int64_t bound) const;
  /// Whether the representation belongs to this view's carrier.
  bool in_carrier(const JordanElement& x) const;

 private:
  JordanView() = default;
  Kind kind_ = Kind::plus;
  std::string tag_;
  CocyclePtr cocycle_;
  std::optional<GradedInvolution> theta_;
  CliffordHandle clifford_;
  AlbertHandle albert_;
};

/// Jordan product of the view; hermitian views reject non-fixed operands.
JordanElement jordan_mul(const JordanElement& a, const JordanElement& b);

/// x^2 . (y . x) = (x^2 . y) . x over homogeneous pairs (x, y) and sums
/// x = a + b, y = c with a, b, c homogeneous basis elements in the window.
/// Exhaustive up to cap triples, seeded sample above.
CheckReport jordan_identity_check(const JordanView& v, std::int64_t bound, std::uint64_t cap = 20'000,
                                  std::uint64_t seed = 0x5eed);

struct TorusAxiomsReport {
  CheckReport t1;
  CheckReport t2;
  CheckReport t3;
  std::vector<GroupElement> support;
  bool passed() const { return t1.passed() && t2.passed() && t3.passed(); }
};

TorusAxiomsReport torus_axioms_check(const JordanView& v, std::int64_t bound);

/// Pairs of windowed support points whose product vanishes are listed as
/// observations; any such pair fails the check.
CheckReport strong_type_check(const JordanView& v, std::int64_t bound);

/// Every basis vector of degree in gamma commutes and associates with all
/// windowed basis pairs, and every other windowed basis vector fails to.
CheckReport center_check(const JordanView& v, const Subgroup& gamma, std::int64_t bound);

/// v with u . v = 1 and u^2 . v = u, via the family formula.
JordanElement jordan_invert(const JordanElement& u);

/// J^sigma . J^tau = coeff * basis(sigma + tau) over the windowed support.
struct StructureConstant {
  GroupElement sigma;
  GroupElement tau;
  Scalar coeff;
};
std::vector<StructureConstant> structure_constants(const JordanView& v, std::int64_t bound);

// ---------------------------------------------------- Hermitian polynomials

/// x_1 ... x_n + x_n ... x_1.
AssocElement tad(std::span<const AssocElement> xs);
/// [[x, y], z].
AssocElement d_operator(const AssocElement& x, const AssocElement& y, const AssocElement& z);

/// Reading of the trailing D_{x,y} in p16; only the element reading is implemented.
enum class P16Reading { bracket_with_commutator };

/// [[D^2(z)^2, D(w)], [x, y]] with D = D_{x,y}.
AssocElement p16(const AssocElement& x, const AssocElement& y, const AssocElement& z, const AssocElement& w,
                 P16Reading reading);
/// [[p16(a0..a3), p16(a4..a7)], p16(a8..a11)].
AssocElement q48(std::span<const AssocElement> args, P16Reading reading);

// ------------------------------------------------- Hermitian-type builders

struct PlusTypeSpec {
  CocyclePtr cocycle;
};
struct InvolutionTypeSpec {
  CocyclePtr cocycle;
  QuadraticMapF2 q;
};
struct ExtensionTypeSpec {
  CocyclePtr cocycle;  // over a quadratic extension E
};
using HermitianTypeSpec = std::variant<PlusTypeSpec, InvolutionTypeSpec, ExtensionTypeSpec>;

/// Throws CompatibilityError with the violating pair when the precondition fails.
JordanHandle build_hermitian_type(const HermitianTypeSpec& spec);

}  // namespace toruslab
