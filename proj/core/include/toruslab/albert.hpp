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

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toruslab/assoc.hpp"
#include "toruslab/lattice.hpp"
#include "toruslab/report.hpp"
#include "toruslab/scalars.hpp"

namespace toruslab {

/// (eps(n), eta(n)) with eps in {0, 1, 2}, eps = n mod 3 and eta = n - eps.
std::pair<std::int64_t, std::int64_t> eps_eta(std::int64_t n);

/// sigma = i sigma_1 + j sigma_2 + k sigma_3 + gamma with 0 <= i, j, k <= 2.
struct AlbertDecomposition {
  int i = 0;
  int j = 0;
  int k = 0;
  GroupElement gamma;
};

/// (G = Z^n, Delta, Gamma) with chosen sigma_1, sigma_2, sigma_3.
class AlbertTriple {
 public:
  AlbertTriple(Subgroup delta, Subgroup gamma, std::array<GroupElement, 3> sigma);

  std::size_t rank() const { return delta_.rank(); }
  const Subgroup& delta() const { return delta_; }
  const Subgroup& gamma() const { return gamma_; }
  const GroupElement& sigma(std::size_t i) const { return sigma_.at(i); }
  /// Throws DecompositionError when the 27 combinations do not cover G / Gamma.
  AlbertDecomposition decompose(const GroupElement& x) const;
  /// i sigma_1 + j sigma_2 + k sigma_3.
  GroupElement combination(int i, int j, int k) const;

 private:
  Subgroup delta_;
  Subgroup gamma_;
  std::array<GroupElement, 3> sigma_;
  std::map<GroupElement, std::array<int, 3>> residue_;  // reduced combination -> (i, j, k)
};

/// 3G strictly inside Gamma, Gamma in Delta, G / Gamma of rank 3 over Z_3
/// with basis sigma_i + Gamma, and Delta / Gamma of rank 2 with basis
/// sigma_1 + Gamma, sigma_2 + Gamma.
CheckReport validate_albert_triple(const AlbertTriple& t);

/// Symmetric normalized 2-cocycle on Gamma; an empty function means mu = 1.
using GammaCocycle = std::function<Scalar(const GroupElement&, const GroupElement&)>;

/// lambda(i s1 + j s2 + g, i' s1 + j' s2 + g') =
///   q^{j i'} mu(eta(i+i') s1, eta(j+j') s2) mu(g, g') mu(eta(i+i') s1 + eta(j+j') s2, g + g').
/// Both arguments must lie in Delta (DecompositionError otherwise).
Scalar lambda_albert(const AlbertTriple& t, const Scalar& q, const GammaCocycle& mu, const GroupElement& s,
                     const GroupElement& u);

/// Albert-kind cocycle with domain Delta. A nonempty mu must pass a
/// symmetry, normalization and cocycle check on the radius-1 Gamma window.
CocyclePtr albert_cocycle(std::shared_ptr<const AlbertTriple> t, const Scalar& q, GammaCocycle mu = {});

/// The central-degree-3 torus (F^t[Delta], lambda(w, mu)) over Q(w), with
/// u1 = x^{sigma_1}, u2 = x^{sigma_2} and u3 = x^{3 sigma_3} by default.
class Deg3Torus {
 public:
  static std::shared_ptr<const Deg3Torus> build(std::shared_ptr<const AlbertTriple> t, GammaCocycle mu = {});

  const AlbertTriple& triple() const { return *triple_; }
  const std::shared_ptr<const AlbertTriple>& triple_handle() const { return triple_; }
  const CocyclePtr& handle() const { return cocycle_; }
  const FieldDescriptor& field() const { return cocycle_->field(); }

  AssocElement u1() const { return x(triple_->sigma(0)); }
  AssocElement u2() const { return x(triple_->sigma(1)); }
  /// x^{3 sigma_3}; central since 3G lies in Gamma.
  AssocElement u3() const { return x(3 * triple_->sigma(2)); }
  /// x^s for s in Delta.
  AssocElement x(const GroupElement& s) const { return AssocElement::basis(cocycle_, s); }
  /// u1^i u2^j = x^{i sigma_1 + j sigma_2}, 0 <= i, j <= 2.
  AssocElement z_basis(int i, int j) const { return x(triple_->combination(i, j, 0)); }
  AssocElement zero() const { return AssocElement(cocycle_); }
  AssocElement one() const { return AssocElement::one(cocycle_); }

  /// Coordinates over the Z-basis u1^i u2^j: a = sum c_{3i+j} u1^i u2^j with
  /// every c supported on Gamma.
  std::array<AssocElement, 9> coordinates(const AssocElement& a) const;
  /// Inverse of coordinates().
  AssocElement from_coordinates(const std::array<AssocElement, 9>& c) const;
  /// Whether every term of a lies in Gamma.
  bool is_central(const AssocElement& a) const;

 private:
  Deg3Torus() = default;
  std::shared_ptr<const AlbertTriple> triple_;
  CocyclePtr cocycle_;
};

using Deg3Handle = std::shared_ptr<const Deg3Torus>;

/// Trace, spur and norm, valued in the center Z = F[Gamma].
struct CubicData {
  AssocElement trace;
  AssocElement spur;
  AssocElement norm;
};

/// Cubic norm structure of a Deg3Torus.
class CubicNormStructure {
 public:
  explicit CubicNormStructure(Deg3Handle a) : a_(std::move(a)) {}

  const Deg3Torus& algebra() const { return *a_; }

  /// Matrix of left multiplication by x on the Z-basis: entry [r][c] is the
  /// r-th coordinate of x * basis_c.
  std::vector<std::vector<AssocElement>> left_multiplication(const AssocElement& x) const;
  /// Coefficients p_0..p_9 of det(lambda - L_x) over Z (p_9 = 1).
  std::vector<AssocElement> charpoly(const AssocElement& x) const;
  /// Cube root m = lambda^3 + a lambda^2 + b lambda + c of the charpoly,
  /// verified by m^3 = p; T = -a, S = b, N = -c. Throws DecompositionError
  /// when no cube root exists.
  CubicData via_charpoly(const AssocElement& x) const;

  /// T is Z-linear with T(1) = 3 and T(u1^i u2^j) = 0 otherwise.
  AssocElement trace(const AssocElement& x) const;
  /// (T(x)^2 - T(x^2)) / 2.
  AssocElement spur(const AssocElement& x) const;
  /// (T(x)^3 - 3 T(x) T(x^2) + 2 T(x^3)) / 6.
  AssocElement norm(const AssocElement& x) const;
  CubicData data(const AssocElement& x) const;
  /// x^2 - T(x) x + S(x) 1.
  AssocElement adjoint(const AssocElement& x) const;
  /// (x + y)# - x# - y# = xy + yx - T(x) y - T(y) x + (T(x) T(y) - T(xy)) 1.
  AssocElement cross(const AssocElement& x, const AssocElement& y) const;

 private:
  Deg3Handle a_;
};

class AlbertTorus;
using AlbertHandle = std::shared_ptr<const AlbertTorus>;

/// (x0, x1, x2) in A + A + A.
class AlbertElement {
 public:
  AlbertElement(AlbertHandle h, AssocElement x0, AssocElement x1, AssocElement x2);

  const AlbertHandle& handle() const { return h_; }
  const AssocElement& operator[](std::size_t i) const { return x_.at(i); }
  bool is_zero() const { return x_[0].is_zero() && x_[1].is_zero() && x_[2].is_zero(); }
  /// Sorted G-degrees present: a term of degree d in component k has degree
  /// d, d + sigma_3, d - sigma_3 for k = 0, 1, 2.
  std::vector<GroupElement> degrees() const;

  AlbertElement& operator+=(const AlbertElement& o);
  AlbertElement& operator-=(const AlbertElement& o);
  friend AlbertElement operator+(AlbertElement a, const AlbertElement& b) { return a += b; }
  friend AlbertElement operator-(AlbertElement a, const AlbertElement& b) { return a -= b; }
  AlbertElement scaled(const Scalar& c) const;
  AlbertElement scaled(const Rational& r) const;
  /// Componentwise multiplication by a central element.
  AlbertElement central_scaled(const AssocElement& z) const;
  friend bool operator==(const AlbertElement& a, const AlbertElement& b);
  std::string to_string() const;

 private:
  void require_same(const AlbertElement& o) const;
  AlbertHandle h_;
  std::array<AssocElement, 3> x_;
};

/// First Tits construction (A, u3) over a Deg3Torus.
class AlbertTorus : public std::enable_shared_from_this<AlbertTorus> {
 public:
  /// u3 must be a nonzero homogeneous central element of degree 3 sigma_3 + Gamma.
  static AlbertHandle first_tits(Deg3Handle a, const AssocElement& u3);
  static AlbertHandle first_tits(Deg3Handle a) { return first_tits(a, a->u3()); }

  const Deg3Torus& base() const { return *a_; }
  const Deg3Handle& base_handle() const { return a_; }
  const CubicNormStructure& cubic() const { return cubic_; }
  const AssocElement& u3() const { return u3_; }
  const AssocElement& u3_inverse() const { return u3_inv_; }
  std::size_t rank() const { return a_->triple().rank(); }
  const FieldDescriptor& field() const { return a_->field(); }

  AlbertElement zero() const;
  AlbertElement unit() const;
  AlbertElement make(AssocElement x0, AssocElement x1, AssocElement x2) const;
  /// t_alpha: (u_alpha, 0, 0), (0, u_{alpha - sigma_3}, 0) or
  /// (0, 0, u_{alpha + sigma_3}) according to k = 0, 1, 2.
  AlbertElement t_alpha(const GroupElement& alpha) const;

  AssocElement trace(const AlbertElement& x) const;
  AssocElement bilinear_trace(const AlbertElement& x, const AlbertElement& y) const;
  AssocElement spur(const AlbertElement& x) const;
  AssocElement norm(const AlbertElement& x) const;
  AlbertElement adjoint(const AlbertElement& x) const;
  AlbertElement cross(const AlbertElement& x, const AlbertElement& y) const;
  /// x . y = (x cross y + T(x) y + T(y) x - S(x, y) e) / 2.
  AlbertElement product(const AlbertElement& x, const AlbertElement& y) const;
  /// x^# / N(x) for homogeneous x.
  AlbertElement invert(const AlbertElement& x) const;

 private:
  AlbertTorus(Deg3Handle a, AssocElement u3);
  AssocElement u_of(const GroupElement& d) const;
  Deg3Handle a_;
  CubicNormStructure cubic_;
  AssocElement u3_;
  AssocElement u3_inv_;
};

/// For every windowed pair, t_a . t_b = r t_{a+b} with r a nonzero scalar.
CheckReport albert_grading_check(const AlbertTorus& t, std::int64_t bound);

/// Cubic norm identities over the standard data of t: for the nine Z-basis
/// elements and `samples` random elements of A, the charpoly is a cube whose
/// root matches the power-trace route, T vanishes off the identity basis
/// element, and x^3 - T x^2 + S x - N = 0, x## = N x. On `samples` random
/// elements of the Tits algebra, x## = N(x) x and Cayley-Hamilton hold.
CheckReport cubic_norm_check(const AlbertTorus& t, std::uint64_t samples, std::uint64_t seed = 0x5eed);

}  // namespace toruslab
