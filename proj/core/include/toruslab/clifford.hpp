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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toruslab/lattice.hpp"
#include "toruslab/report.hpp"
#include "toruslab/scalars.hpp"

namespace toruslab {

/// (S, Gamma, {a_eps}) with S = union of eps + Gamma over the reps. reps[0]
/// is the zero rep; a[k] belongs to reps[k] for k >= 1 (a[0] is unused and
/// stored as 1).
class CliffordTriple {
 public:
  /// Structural checks only (ranks, distinct cosets, nonzero a); the
  /// defining conditions are reported by validate_triple.
  CliffordTriple(Subgroup gamma, std::vector<GroupElement> reps, std::vector<Scalar> a);

  std::size_t rank() const { return set_.rank(); }
  const Subgroup& gamma() const { return set_.base(); }
  const CosetUnionSet& support_set() const { return set_; }
  const std::vector<GroupElement>& reps() const { return set_.reps(); }
  std::size_t rep_count() const { return set_.reps().size(); }
  const Scalar& a(std::size_t k) const { return a_.at(k); }
  const FieldDescriptor& field() const { return a_.front().field(); }

 private:
  CosetUnionSet set_;
  std::vector<Scalar> a_;
};

using CliffordHandle = std::shared_ptr<const CliffordTriple>;

/// 2G in Gamma, Gamma strictly inside S, <S> = G, and the PRS axioms.
CheckReport validate_triple(const CliffordTriple& t);

/// Gamma when there are at least two nonzero reps. With a single nonzero rep
/// J = Z + Z t is commutative and associative, its center is all of J and the
/// central grading group is <S> = Z^n.
Subgroup clifford_central_grading_group(const CliffordTriple& t);

/// J_sigma = F z^{sigma - eps} t_eps; rep 0 stands for t_0 = 1.
struct GradingComponent {
  std::size_t rep = 0;
  GroupElement gamma;
};

/// nullopt when sigma is outside S.
std::optional<GradingComponent> grading_component(const CliffordTriple& t, const GroupElement& sigma);

/// Element of J = Z + V with Z = F[Gamma] and V spanned by z^gamma t_eps.
class CliffordElement {
 public:
  using ZPart = std::map<GroupElement, Scalar>;
  using VKey = std::pair<std::size_t, GroupElement>;  // (rep index >= 1, gamma)
  using VPart = std::map<VKey, Scalar>;

  explicit CliffordElement(CliffordHandle t);
  static CliffordElement one(CliffordHandle t);
  /// c z^gamma.
  static CliffordElement z(CliffordHandle t, const GroupElement& gamma, const Scalar& c);
  /// c z^gamma t_eps for rep index k >= 1.
  static CliffordElement v(CliffordHandle t, std::size_t k, const GroupElement& gamma, const Scalar& c);
  /// Basis element of J_sigma (nullopt when sigma is outside S).
  static std::optional<CliffordElement> homogeneous(CliffordHandle t, const GroupElement& sigma);

  const CliffordHandle& handle() const { return triple_; }
  const CliffordTriple& triple() const { return *triple_; }
  const ZPart& zpart() const { return z_; }
  const VPart& vpart() const { return v_; }
  bool is_zero() const { return z_.empty() && v_.empty(); }
  /// Sorted list of the degrees carrying nonzero coefficients.
  std::vector<GroupElement> degrees() const;

  void add_z(const GroupElement& gamma, const Scalar& c);
  void add_v(std::size_t k, const GroupElement& gamma, const Scalar& c);

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  CliffordElement scaled(const Scalar& c) const;
  friend bool operator==(const CliffordElement& a, const CliffordElement& b);
  std::string to_string() const;

 private:
  void require_same(const CliffordElement& o) const;
  CliffordHandle triple_;
  ZPart z_;
  VPart v_;
};

/// f(z^g t_eps, z^g' t_eta) = a_eps z^{g + g' + 2 eps} if eps = eta, else 0.
CliffordElement bilinear_f(const CliffordHandle& t, std::size_t eps, const GroupElement& g, std::size_t eta,
                           const GroupElement& g2);

/// (z1 + v1)(z2 + v2) = (z1 z2 + f(v1, v2)) + (z1 v2 + z2 v1).
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b);

/// Inverse of a single-term element: (c z^g)^-1 = c^-1 z^-g and
/// (c z^g t_eps)^-1 = (c a_eps)^-1 z^{-g - 2 eps} t_eps.
CliffordElement clifford_invert(const CliffordElement& x);

}  // namespace toruslab
