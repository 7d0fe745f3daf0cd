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

#include "toruslab/clifford.hpp"

#include <algorithm>
#include <sstream>

#include "toruslab/errors.hpp"

namespace toruslab {

CliffordTriple::CliffordTriple(Subgroup gamma, std::vector<GroupElement> reps, std::vector<Scalar> a)
    : set_(std::move(gamma), std::move(reps)), a_(std::move(a)) {
  if (a_.empty()) throw ConstructionError("clifford triple needs at least one a_eps");
  if (a_.size() + 1 == set_.reps().size()) a_.insert(a_.begin(), Scalar::one(a_.front().field()));
  if (a_.size() != set_.reps().size())
    throw ConstructionError("clifford triple needs one a_eps per nonzero rep: got " + std::to_string(a_.size() - 1) +
                            " values for " + std::to_string(set_.reps().size() - 1) + " reps");
  for (std::size_t k = 1; k < a_.size(); ++k) {
    if (!(a_[k].field() == a_[0].field())) throw ScalarError("clifford a_eps values mix fields");
    if (a_[k].is_zero()) throw ConstructionError("a_eps for rep " + set_.reps()[k].to_string() + " is zero");
  }
}

CheckReport validate_triple(const CliffordTriple& t) {
  CheckReport rep;
  rep.name = "clifford-triple";
  const std::size_t n = t.rank();
  auto note = [&](const std::string& clause, std::vector<GroupElement> els) {
    if (rep.verdict != Verdict::fail) rep.fail(Witness{clause, els, {}});
    else rep.observations.push_back(Witness{clause, std::move(els), {}});
  };
  for (std::size_t i = 0; i < n; ++i) {
    ++rep.checked;
    const GroupElement e = GroupElement::unit(n, i);
    if (!t.gamma().contains(2 * e)) note("2G is not inside Gamma", {2 * e});
  }
  ++rep.checked;
  if (t.rep_count() < 2) note("Gamma is not a proper subset of S (no nonzero rep)", {});
  ++rep.checked;
  std::vector<GroupElement> gens = t.gamma().basis();
  gens.insert(gens.end(), t.reps().begin(), t.reps().end());
  const Subgroup span(n, gens);
  if (!(span.full_rank() && span.index() == std::optional<std::uint64_t>(1)))
    note("S does not generate G", {});
  ++rep.checked;
  const PrsReport prs = prs_check(t.support_set(), n);
  if (!prs.ok()) {
    std::vector<GroupElement> w;
    if (prs.closure_witness_s) w = {*prs.closure_witness_s, *prs.closure_witness_t};
    note("S is not a pointed reflection subspace", w);
  }
  rep.detail = "2G in Gamma, Gamma strictly inside S, <S> = G, S - 2S in S";
  return rep;
}

Subgroup clifford_central_grading_group(const CliffordTriple& t) {
  if (t.rep_count() == 2) return Subgroup::whole(t.rank());
  return t.gamma();
}

std::optional<GradingComponent> grading_component(const CliffordTriple& t, const GroupElement& sigma) {
  const auto k = t.support_set().rep_index(sigma);
  if (!k) return std::nullopt;
  return GradingComponent{*k, sigma - t.reps()[*k]};
}

// -------------------------------------------------------------- CliffordElement

CliffordElement::CliffordElement(CliffordHandle t) : triple_(std::move(t)) {
  if (!triple_) throw Error("null clifford handle");
}

CliffordElement CliffordElement::one(CliffordHandle t) {
  const auto f = t->field();
  const std::size_t n = t->rank();
  return z(std::move(t), GroupElement::zero(n), Scalar::one(f));
}

CliffordElement CliffordElement::z(CliffordHandle t, const GroupElement& gamma, const Scalar& c) {
  CliffordElement e(std::move(t));
  e.add_z(gamma, c);
  return e;
}

CliffordElement CliffordElement::v(CliffordHandle t, std::size_t k, const GroupElement& gamma, const Scalar& c) {
  CliffordElement e(std::move(t));
  e.add_v(k, gamma, c);
  return e;
}

std::optional<CliffordElement> CliffordElement::homogeneous(CliffordHandle t, const GroupElement& sigma) {
  const auto comp = grading_component(*t, sigma);
  if (!comp) return std::nullopt;
  const Scalar one = Scalar::one(t->field());
  if (comp->rep == 0) return z(std::move(t), comp->gamma, one);
  return v(std::move(t), comp->rep, comp->gamma, one);
}

std::vector<GroupElement> CliffordElement::degrees() const {
  std::vector<GroupElement> out;
  for (const auto& [g, c] : z_) out.push_back(g);
  for (const auto& [k, c] : v_) out.push_back(k.second + triple_->reps()[k.first]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void CliffordElement::add_z(const GroupElement& gamma, const Scalar& c) {
  if (c.is_zero()) return;
  if (!triple_->gamma().contains(gamma))
    throw DecompositionError("z-degree " + gamma.to_string() + " is not in Gamma");
  auto [it, inserted] = z_.try_emplace(gamma, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) z_.erase(it);
  }
}

void CliffordElement::add_v(std::size_t k, const GroupElement& gamma, const Scalar& c) {
  if (k == 0) return add_z(gamma, c);
  if (k >= triple_->rep_count()) throw DecompositionError("unknown rep index " + std::to_string(k));
  if (c.is_zero()) return;
  if (!triple_->gamma().contains(gamma))
    throw DecompositionError("z-degree " + gamma.to_string() + " is not in Gamma");
  auto [it, inserted] = v_.try_emplace(VKey{k, gamma}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v_.erase(it);
  }
}

void CliffordElement::require_same(const CliffordElement& o) const {
  if (triple_ != o.triple_) throw HandleMismatchError("clifford elements from different triples");
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  require_same(o);
  for (const auto& [g, c] : o.z_) add_z(g, c);
  for (const auto& [k, c] : o.v_) add_v(k.first, k.second, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  require_same(o);
  for (const auto& [g, c] : o.z_) add_z(g, -c);
  for (const auto& [k, c] : o.v_) add_v(k.first, k.second, -c);
  return *this;
}

CliffordElement CliffordElement::scaled(const Scalar& k) const {
  CliffordElement out(triple_);
  if (k.is_zero()) return out;
  for (const auto& [g, c] : z_) out.z_.emplace(g, c * k);
  for (const auto& [key, c] : v_) out.v_.emplace(key, c * k);
  return out;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
  return a.triple_ == b.triple_ && a.z_ == b.z_ && a.v_ == b.v_;
}

std::string CliffordElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  for (const auto& [g, c] : z_) {
    sep();
    if (!c.is_one()) os << '(' << c << ")*";
    os << "z^" << g;
  }
  for (const auto& [k, c] : v_) {
    sep();
    if (!c.is_one()) os << '(' << c << ")*";
    os << "z^" << k.second << "*t_" << triple_->reps()[k.first];
  }
  return os.str();
}

CliffordElement bilinear_f(const CliffordHandle& t, std::size_t eps, const GroupElement& g, std::size_t eta,
                           const GroupElement& g2) {
  if (eps == 0 || eta == 0 || eps >= t->rep_count() || eta >= t->rep_count())
    throw DecompositionError("bilinear_f needs nonzero rep indices below " + std::to_string(t->rep_count()));
  CliffordElement out(t);
  if (eps != eta) return out;
  out.add_z(g + g2 + 2 * t->reps()[eps], t->a(eps));
  return out;
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
  if (a.handle() != b.handle()) throw HandleMismatchError("clifford elements from different triples");
  const CliffordTriple& t = a.triple();
  CliffordElement out(a.handle());
  for (const auto& [g1, c1] : a.zpart()) {
    for (const auto& [g2, c2] : b.zpart()) out.add_z(g1 + g2, c1 * c2);
    for (const auto& [k2, c2] : b.vpart()) out.add_v(k2.first, g1 + k2.second, c1 * c2);
  }
  for (const auto& [k1, c1] : a.vpart()) {
    for (const auto& [g2, c2] : b.zpart()) out.add_v(k1.first, g2 + k1.second, c1 * c2);
    for (const auto& [k2, c2] : b.vpart()) {
      if (k1.first != k2.first) continue;
      out.add_z(k1.second + k2.second + 2 * t.reps()[k1.first], c1 * c2 * t.a(k1.first));
    }
  }
  return out;
}

CliffordElement clifford_invert(const CliffordElement& x) {
  if (x.is_zero()) throw ZeroElementError("zero element has no inverse");
  if (x.zpart().size() + x.vpart().size() != 1)
    throw NotInvertibleError("only homogeneous clifford elements have a certified inverse");
  if (!x.zpart().empty()) {
    const auto& [g, c] = *x.zpart().begin();
    return CliffordElement::z(x.handle(), -g, c.inverse());
  }
  const auto& [key, c] = *x.vpart().begin();
  const auto& t = x.triple();
  return CliffordElement::v(x.handle(), key.first, -key.second - 2 * t.reps()[key.first],
                            (c * t.a(key.first)).inverse());
}

}  // namespace toruslab
