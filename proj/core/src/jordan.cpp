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

#include "toruslab/jordan.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "toruslab/errors.hpp"
#include "toruslab/parallel.hpp"

namespace toruslab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

// -------------------------------------------------------------- JordanElement

JordanElement::JordanElement(JordanHandle view, Rep rep) : view_(std::move(view)), rep_(std::move(rep)) {
  if (!view_) throw Error("null jordan view");
  const bool ok = std::visit(overloaded{
                                 [&](const AssocElement&) {
                                   return view_->kind() == JordanView::Kind::plus ||
                                          view_->kind() == JordanView::Kind::hermitian;
                                 },
                                 [&](const CliffordElement&) { return view_->kind() == JordanView::Kind::clifford; },
                                 [&](const AlbertElement&) { return view_->kind() == JordanView::Kind::albert; },
                             },
                             rep_);
  if (!ok) throw HandleMismatchError("representation does not match the jordan view kind");
}

bool JordanElement::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, rep_);
}

std::vector<GroupElement> JordanElement::degrees() const {
  return std::visit(overloaded{
                        [](const AssocElement& a) {
                          std::vector<GroupElement> out;
                          for (const auto& [s, c] : a.terms()) out.push_back(s);
                          return out;
                        },
                        [](const auto& x) { return x.degrees(); },
                    },
                    rep_);
}

void JordanElement::require_same(const JordanElement& o) const {
  if (view_ != o.view_) throw HandleMismatchError("jordan elements from different views");
}

JordanElement& JordanElement::operator+=(const JordanElement& o) {
  require_same(o);
  std::visit([&](auto& x) { x += std::get<std::decay_t<decltype(x)>>(o.rep_); }, rep_);
  return *this;
}

JordanElement& JordanElement::operator-=(const JordanElement& o) {
  require_same(o);
  std::visit([&](auto& x) { x -= std::get<std::decay_t<decltype(x)>>(o.rep_); }, rep_);
  return *this;
}

JordanElement JordanElement::scaled(const Rational& r) const {
  return std::visit(overloaded{
                        [&](const CliffordElement& x) {
                          return JordanElement(view_, x.scaled(embed(r, x.triple().field())));
                        },
                        [&](const auto& x) { return JordanElement(view_, x.scaled(r)); },
                    },
                    rep_);
}

bool operator==(const JordanElement& a, const JordanElement& b) { return a.view_ == b.view_ && a.rep_ == b.rep_; }

std::string JordanElement::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, rep_);
}

// ----------------------------------------------------------------- JordanView

JordanHandle JordanView::plus(CocyclePtr c, std::string type_tag) {
  std::shared_ptr<JordanView> v(new JordanView());
  v->kind_ = Kind::plus;
  v->tag_ = std::move(type_tag);
  v->cocycle_ = std::move(c);
  return v;
}

JordanHandle JordanView::hermitian(GradedInvolution theta, std::string type_tag) {
  std::shared_ptr<JordanView> v(new JordanView());
  v->kind_ = Kind::hermitian;
  v->tag_ = std::move(type_tag);
  v->cocycle_ = theta.handle();
  v->theta_ = std::move(theta);
  return v;
}

JordanHandle JordanView::clifford(CliffordHandle t) {
  std::shared_ptr<JordanView> v(new JordanView());
  v->kind_ = Kind::clifford;
  v->tag_ = "clifford";
  v->clifford_ = std::move(t);
  return v;
}

JordanHandle JordanView::albert(AlbertHandle t) {
  std::shared_ptr<JordanView> v(new JordanView());
  v->kind_ = Kind::albert;
  v->tag_ = "albert";
  v->albert_ = std::move(t);
  return v;
}

const FieldDescriptor& JordanView::field() const {
  switch (kind_) {
    case Kind::clifford:
      return clifford_->field();
    case Kind::albert:
      return albert_->field();
    default:
      return cocycle_->field();
  }
}

std::size_t JordanView::rank() const {
  switch (kind_) {
    case Kind::plus:
    case Kind::hermitian:
      return cocycle_->rank();
    case Kind::clifford:
      return clifford_->rank();
    case Kind::albert:
      return albert_->rank();
  }
  return 0;
}

JordanElement JordanView::wrap(JordanElement::Rep rep) const { return JordanElement(shared_from_this(), std::move(rep)); }

JordanElement JordanView::zero() const {
  switch (kind_) {
    case Kind::clifford:
      return wrap(CliffordElement(clifford_));
    case Kind::albert:
      return wrap(albert_->zero());
    default:
      return wrap(AssocElement(cocycle_));
  }
}

JordanElement JordanView::one() const {
  switch (kind_) {
    case Kind::clifford:
      return wrap(CliffordElement::one(clifford_));
    case Kind::albert:
      return wrap(albert_->unit());
    default:
      return wrap(AssocElement::one(cocycle_));
  }
}

std::optional<JordanElement> JordanView::basis_element(const GroupElement& sigma) const {
  if (sigma.rank() != rank()) throw DimensionError("basis_element: wrong rank");
  switch (kind_) {
    case Kind::plus:
      if (!cocycle_->domain().contains(sigma)) return std::nullopt;
      return wrap(AssocElement::basis(cocycle_, sigma));
    case Kind::hermitian:
      if (!cocycle_->domain().contains(sigma) || !theta_->fixes_basis(sigma)) return std::nullopt;
      return wrap(AssocElement::basis(cocycle_, sigma));
    case Kind::clifford: {
      auto e = CliffordElement::homogeneous(clifford_, sigma);
      if (!e) return std::nullopt;
      return wrap(std::move(*e));
    }
    case Kind::albert:
      return wrap(albert_->t_alpha(sigma));
  }
  return std::nullopt;
}

std::vector<GroupElement> JordanView::support_window(std::int64_t bound) const {
  std::vector<GroupElement> out;
  for (const auto& s : window_points(rank(), bound))
    if (basis_element(s)) out.push_back(s);
  return out;
}

bool JordanView::in_carrier(const JordanElement& x) const {
  if (x.view().get() != this) return false;
  if (kind_ == Kind::hermitian) return theta_->is_fixed(x.assoc());
  return true;
}

// --------------------------------------------------------------------- product

JordanElement jordan_mul(const JordanElement& a, const JordanElement& b) {
  if (a.view() != b.view()) throw HandleMismatchError("jordan elements from different views");
  const JordanView& v = *a.view();
  switch (v.kind()) {
    case JordanView::Kind::hermitian:
      if (!v.in_carrier(a) || !v.in_carrier(b))
        throw NotInCarrierError("hermitian jordan product needs theta-fixed operands");
      [[fallthrough]];
    case JordanView::Kind::plus: {
      const auto& x = a.assoc();
      const auto& y = b.assoc();
      return v.wrap((x * y + y * x).scaled(Rational(1, 2)));
    }
    case JordanView::Kind::clifford:
      return v.wrap(clifford_mul(a.clifford(), b.clifford()));
    case JordanView::Kind::albert:
      return v.wrap(v.albert_handle()->product(a.albert(), b.albert()));
  }
  throw Error("unknown jordan view kind");
}

JordanElement jordan_invert(const JordanElement& u) {
  if (u.is_zero()) throw ZeroElementError("zero element has no inverse");
  if (!u.is_homogeneous()) throw NotInvertibleError("only homogeneous elements have a certified inverse");
  const JordanView& v = *u.view();
  switch (v.kind()) {
    case JordanView::Kind::plus:
    case JordanView::Kind::hermitian:
      return v.wrap(invert_homogeneous(u.assoc()));
    case JordanView::Kind::clifford:
      return v.wrap(clifford_invert(u.clifford()));
    case JordanView::Kind::albert:
      return v.wrap(v.albert_handle()->invert(u.albert()));
  }
  throw Error("unknown jordan view kind");
}

namespace {

/// r with p = r * target, for a single-term target.
std::optional<Scalar> ratio(const JordanElement& p, const JordanElement& target) {
  std::optional<Scalar> r = std::visit(
      overloaded{
          [&](const AssocElement& t) -> std::optional<Scalar> {
            const auto& [s, c] = *t.terms().begin();
            return p.assoc().coefficient(s) / c;
          },
          [&](const CliffordElement& t) -> std::optional<Scalar> {
            const auto& pc = p.clifford();
            if (!t.zpart().empty()) {
              const auto& [g, c] = *t.zpart().begin();
              auto it = pc.zpart().find(g);
              return it == pc.zpart().end() ? Scalar::zero(c.field()) : it->second / c;
            }
            const auto& [k, c] = *t.vpart().begin();
            auto it = pc.vpart().find(k);
            return it == pc.vpart().end() ? Scalar::zero(c.field()) : it->second / c;
          },
          [&](const AlbertElement& t) -> std::optional<Scalar> {
            std::size_t comp = 0;
            while (t[comp].is_zero()) ++comp;
            const auto& [s, c] = *t[comp].terms().begin();
            return p.albert()[comp].coefficient(s) / c;
          },
      },
      target.rep());
  const bool match = std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        return std::get<T>(p.rep()) == t.scaled(*r);
      },
      target.rep());
  if (!match) return std::nullopt;
  return r;
}

std::vector<JordanElement> basis_list(const JordanView& v, const std::vector<GroupElement>& support) {
  std::vector<JordanElement> out;
  out.reserve(support.size());
  for (const auto& s : support) out.push_back(*v.basis_element(s));
  return out;
}

}  // namespace

std::vector<StructureConstant> structure_constants(const JordanView& v, std::int64_t bound) {
  const auto support = v.support_window(bound);
  const auto basis = basis_list(v, support);
  const Scalar zero = Scalar::zero(v.field());
  std::vector<std::vector<StructureConstant>> rows(support.size());
  parallel_for(support.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < support.size(); ++j) {
      const JordanElement p = jordan_mul(basis[i], basis[j]);
      const GroupElement sum = support[i] + support[j];
      if (p.is_zero()) {
        rows[i].push_back({support[i], support[j], zero});
        continue;
      }
      const auto target = v.basis_element(sum);
      std::optional<Scalar> r;
      if (target) r = ratio(p, *target);
      if (!r)
        throw Error("product of degrees " + support[i].to_string() + " and " + support[j].to_string() +
                    " is not a multiple of the basis vector of degree " + sum.to_string());
      rows[i].push_back({support[i], support[j], *r});
    }
  });
  std::vector<StructureConstant> out;
  for (auto& r : rows) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

// --------------------------------------------------------------------- checks

CheckReport jordan_identity_check(const JordanView& v, std::int64_t bound, std::uint64_t cap, std::uint64_t seed) {
  CheckReport rep;
  rep.name = "jordan-identity";
  const auto support = v.support_window(bound);
  const auto basis = basis_list(v, support);
  const std::size_t m = basis.size();
  if (m == 0) {
    rep.verdict = Verdict::window_verified;
    rep.detail = "empty support window";
    return rep;
  }
  // case index: (a, b, c) with b == m meaning "no b".
  struct Case {
    std::size_t a, b, c;
  };
  std::vector<Case> cases;
  const std::uint64_t total = static_cast<std::uint64_t>(m) * m * (m + 1);
  if (total <= cap) {
    cases.reserve(total);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b <= m; ++b)
        for (std::size_t c = 0; c < m; ++c) cases.push_back({a, b, c});
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1), pick_b(0, m);
    for (std::uint64_t n = 0; n < cap; ++n) {
      const std::size_t a = pick(rng), b = pick_b(rng), c = pick(rng);
      cases.push_back({a, b, c});
    }
  }
  std::vector<std::optional<Witness>> bad(cases.size());
  parallel_for(cases.size(), [&](std::size_t n) {
    const Case& k = cases[n];
    JordanElement x = basis[k.a];
    if (k.b < m) x += basis[k.b];
    const JordanElement& y = basis[k.c];
    const JordanElement x2 = jordan_mul(x, x);
    const JordanElement lhs = jordan_mul(x2, jordan_mul(y, x));
    const JordanElement rhs = jordan_mul(jordan_mul(x2, y), x);
    if (!(lhs == rhs)) {
      std::vector<GroupElement> els{support[k.a]};
      if (k.b < m) els.push_back(support[k.b]);
      els.push_back(support[k.c]);
      bad[n] = Witness{"x^2 . (y . x) != (x^2 . y) . x with x = sum of the leading basis vectors, y = the last",
                       std::move(els), {lhs.to_string(), rhs.to_string()}};
    }
  });
  rep.checked = cases.size();
  for (auto& w : bad)
    if (w) {
      rep.fail(std::move(*w));
      break;
    }
  if (rep.verdict != Verdict::fail) rep.verdict = Verdict::window_verified;
  std::ostringstream os;
  os << (rep.sampled ? "sampled " : "all ") << rep.checked << " cases over " << m << " windowed basis vectors";
  rep.detail = os.str();
  return rep;
}

TorusAxiomsReport torus_axioms_check(const JordanView& v, std::int64_t bound) {
  TorusAxiomsReport out;
  out.support = v.support_window(bound);
  const auto basis = basis_list(v, out.support);
  const std::size_t n = v.rank();

  out.t1.name = "T1-support-generates";
  out.t1.checked = out.support.size();
  const Subgroup span(n, out.support);
  if (span.full_rank() && span.index() == std::optional<std::uint64_t>(1)) {
    out.t1.verdict = Verdict::window_verified;
    out.t1.detail = "windowed support generates Z^" + std::to_string(n);
  } else {
    out.t1.fail(Witness{"windowed support generates a proper subgroup", {}, {span.to_string()}});
  }

  out.t2.name = "T2-homogeneous-invertible";
  std::vector<std::optional<Witness>> bad(basis.size());
  const JordanElement one = v.one();
  parallel_for(basis.size(), [&](std::size_t i) {
    try {
      const JordanElement u = basis[i];
      const JordanElement w = jordan_invert(u);
      if (!(jordan_mul(u, w) == one) || !(jordan_mul(jordan_mul(u, u), w) == u))
        bad[i] = Witness{"inverse formula fails u . v = 1 or u^2 . v = u", {out.support[i]}, {w.to_string()}};
    } catch (const Error& e) {
      bad[i] = Witness{std::string("inversion failed: ") + e.what(), {out.support[i]}, {}};
    }
  });
  out.t2.checked = basis.size();
  for (auto& w : bad)
    if (w) {
      out.t2.fail(std::move(*w));
      break;
    }
  if (out.t2.passed()) out.t2.verdict = Verdict::window_verified;

  out.t3.name = "T3-components-at-most-1d";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    ++out.t3.checked;
    const auto d = basis[i].degrees();
    if (d.size() != 1 || d.front() != out.support[i]) {
      out.t3.fail(Witness{"basis vector is not homogeneous of its degree", {out.support[i]}, {basis[i].to_string()}});
      break;
    }
  }
  if (out.t3.passed()) {
    out.t3.verdict = Verdict::window_verified;
    out.t3.detail = "one basis vector per support degree";
  }
  return out;
}

CheckReport strong_type_check(const JordanView& v, std::int64_t bound) {
  CheckReport rep;
  rep.name = "strong-type";
  const auto support = v.support_window(bound);
  const auto basis = basis_list(v, support);
  std::vector<std::vector<Witness>> zeros(support.size());
  parallel_for(support.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < support.size(); ++j)
      if (jordan_mul(basis[i], basis[j]).is_zero())
        zeros[i].push_back(Witness{"J^s . J^t = 0", {support[i], support[j]}, {}});
  });
  rep.checked = static_cast<std::uint64_t>(support.size()) * support.size();
  for (auto& z : zeros)
    for (auto& w : z) rep.observations.push_back(std::move(w));
  if (!rep.observations.empty()) {
    rep.verdict = Verdict::fail;
    rep.witness = rep.observations.front();
  } else {
    rep.verdict = Verdict::window_verified;
  }
  rep.detail = std::to_string(rep.observations.size()) + " windowed pairs with zero product";
  return rep;
}

CheckReport center_check(const JordanView& v, const Subgroup& gamma, std::int64_t bound) {
  CheckReport rep;
  rep.name = "center";
  const auto support = v.support_window(bound);
  const auto basis = basis_list(v, support);
  std::vector<std::optional<Witness>> bad(support.size());
  parallel_for(support.size(), [&](std::size_t i) {
    const JordanElement& x = basis[i];
    bool nuclear = true;
    for (std::size_t a = 0; a < basis.size() && nuclear; ++a) {
      const JordanElement xa = jordan_mul(x, basis[a]);
      if (!(xa == jordan_mul(basis[a], x))) nuclear = false;
      for (std::size_t b = 0; b < basis.size() && nuclear; ++b) {
        const JordanElement ab = jordan_mul(basis[a], basis[b]);
        if (!(jordan_mul(xa, basis[b]) == jordan_mul(x, ab))) nuclear = false;
        if (!(jordan_mul(jordan_mul(basis[a], x), basis[b]) == jordan_mul(basis[a], jordan_mul(x, basis[b]))))
          nuclear = false;
      }
    }
    const bool expected = gamma.contains(support[i]);
    if (nuclear != expected)
      bad[i] = Witness{expected ? "degree in Gamma but the basis vector is not central"
                                : "basis vector outside Gamma is central on the window",
                       {support[i]}, {}};
  });
  rep.checked = support.size();
  for (auto& w : bad)
    if (w) {
      rep.fail(std::move(*w));
      break;
    }
  if (rep.passed()) rep.verdict = Verdict::window_verified;
  rep.detail = "central basis vectors are exactly those of degree in " + gamma.to_string();
  return rep;
}

// ------------------------------------------------------- Hermitian polynomials

AssocElement tad(std::span<const AssocElement> xs) {
  if (xs.size() < 2) throw Error("tad needs at least two arguments");
  AssocElement fwd = xs.front();
  AssocElement bwd = xs.back();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    fwd = fwd * xs[i];
    bwd = bwd * xs[xs.size() - 1 - i];
  }
  return fwd + bwd;
}

AssocElement d_operator(const AssocElement& x, const AssocElement& y, const AssocElement& z) {
  return commutator(commutator(x, y), z);
}

AssocElement p16(const AssocElement& x, const AssocElement& y, const AssocElement& z, const AssocElement& w,
                 P16Reading) {
  const AssocElement c = commutator(x, y);
  const AssocElement d2z = commutator(c, commutator(c, z));
  return commutator(commutator(d2z * d2z, commutator(c, w)), c);
}

AssocElement q48(std::span<const AssocElement> a, P16Reading reading) {
  if (a.size() != 12) throw Error("q48 takes 12 arguments");
  const AssocElement p1 = p16(a[0], a[1], a[2], a[3], reading);
  const AssocElement p2 = p16(a[4], a[5], a[6], a[7], reading);
  const AssocElement p3 = p16(a[8], a[9], a[10], a[11], reading);
  return commutator(commutator(p1, p2), p3);
}

JordanHandle build_hermitian_type(const HermitianTypeSpec& spec) {
  return std::visit(overloaded{
                        [](const PlusTypeSpec& s) { return JordanView::plus(s.cocycle, "plus"); },
                        [](const InvolutionTypeSpec& s) {
                          return JordanView::hermitian(GradedInvolution::from_quadratic_map(s.cocycle, s.q),
                                                       "involution");
                        },
                        [](const ExtensionTypeSpec& s) {
                          return JordanView::hermitian(GradedInvolution::semilinear(s.cocycle), "extension");
                        },
                    },
                    spec);
}

}  // namespace toruslab
