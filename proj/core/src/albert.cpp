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

#include "toruslab/albert.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "toruslab/errors.hpp"
#include "toruslab/parallel.hpp"

namespace toruslab {

std::pair<std::int64_t, std::int64_t> eps_eta(std::int64_t n) {
  const std::int64_t e = floor_mod(n, 3);
  return {e, n - e};
}

// ---------------------------------------------------------------- AlbertTriple

AlbertTriple::AlbertTriple(Subgroup delta, Subgroup gamma, std::array<GroupElement, 3> sigma)
    : delta_(std::move(delta)), gamma_(std::move(gamma)), sigma_(std::move(sigma)) {
  const std::size_t n = delta_.rank();
  if (gamma_.rank() != n) throw DimensionError("albert triple: Gamma and Delta have different ranks");
  for (const auto& s : sigma_)
    if (s.rank() != n) throw DimensionError("albert triple: sigma of rank " + std::to_string(s.rank()));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) residue_.emplace(gamma_.reduce(combination(i, j, k)), std::array<int, 3>{i, j, k});
}

GroupElement AlbertTriple::combination(int i, int j, int k) const {
  return static_cast<std::int64_t>(i) * sigma_[0] + static_cast<std::int64_t>(j) * sigma_[1] +
         static_cast<std::int64_t>(k) * sigma_[2];
}

AlbertDecomposition AlbertTriple::decompose(const GroupElement& x) const {
  if (x.rank() != rank()) throw DimensionError("albert decomposition: wrong rank");
  auto it = residue_.find(gamma_.reduce(x));
  if (it == residue_.end())
    throw DecompositionError(x.to_string() + " is not of the form i s1 + j s2 + k s3 + gamma");
  const auto [i, j, k] = it->second;
  return AlbertDecomposition{i, j, k, x - combination(i, j, k)};
}

CheckReport validate_albert_triple(const AlbertTriple& t) {
  CheckReport rep;
  rep.name = "albert-triple";
  const std::size_t n = t.rank();
  auto fail = [&](const std::string& why, std::vector<GroupElement> els) {
    if (rep.verdict != Verdict::fail) rep.fail(Witness{why, std::move(els), {}});
    else rep.observations.push_back(Witness{why, std::move(els), {}});
  };
  bool three_g_inside = true;
  for (std::size_t i = 0; i < n; ++i) {
    ++rep.checked;
    const GroupElement e = 3 * GroupElement::unit(n, i);
    if (!t.gamma().contains(e)) {
      fail("3G is not inside Gamma", {e});
      three_g_inside = false;
    }
  }
  ++rep.checked;
  if (three_g_inside && Subgroup::scaled(n, 3).contains(t.gamma())) fail("Gamma equals 3G", {});
  ++rep.checked;
  if (!t.delta().contains(t.gamma())) fail("Gamma is not inside Delta", {});
  ++rep.checked;
  const auto qg = t.gamma().quotient();
  if (!qg.finite() || qg.order() != std::optional<std::uint64_t>(27) ||
      std::count(qg.torsion.begin(), qg.torsion.end(), 3) != 3)
    fail("G / Gamma is not of rank 3 over Z_3", {});
  ++rep.checked;
  const Subgroup d_over_g(n, [&] {
    auto g = t.gamma().basis();
    g.push_back(t.sigma(0));
    g.push_back(t.sigma(1));
    return g;
  }());
  if (!(d_over_g == t.delta())) fail("sigma_1, sigma_2 and Gamma do not generate Delta", {t.sigma(0), t.sigma(1)});
  ++rep.checked;
  std::set<GroupElement> seen;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) seen.insert(t.gamma().reduce(t.combination(i, j, k)));
  if (seen.size() != 27) fail("sigma_i + Gamma are not a basis of G / Gamma", {t.sigma(0), t.sigma(1), t.sigma(2)});
  rep.detail = "3G < Gamma <= Delta <= G, |G/Gamma| = 27, |Delta/Gamma| = 9";
  return rep;
}

// ------------------------------------------------------------------- cocycle

Scalar lambda_albert(const AlbertTriple& t, const Scalar& q, const GammaCocycle& mu, const GroupElement& s,
                     const GroupElement& u) {
  const AlbertDecomposition a = t.decompose(s);
  const AlbertDecomposition b = t.decompose(u);
  if (a.k != 0 || b.k != 0)
    throw DecompositionError("albert cocycle arguments must lie in Delta: " + s.to_string() + ", " + u.to_string());
  Scalar v = q.pow((a.j * b.i) % 3);
  if (mu) {
    const auto ei = eps_eta(a.i + b.i).second;
    const auto ej = eps_eta(a.j + b.j).second;
    const GroupElement p = ei * t.sigma(0);
    const GroupElement r = ej * t.sigma(1);
    v *= mu(p, r) * mu(a.gamma, b.gamma) * mu(p + r, a.gamma + b.gamma);
  }
  return v;
}

CocyclePtr albert_cocycle(std::shared_ptr<const AlbertTriple> t, const Scalar& q, GammaCocycle mu) {
  if (!q.pow(3).is_one() || q.is_one()) throw ConstructionError("albert cocycle needs a primitive cube root q");
  if (mu) {
    const auto w = t->gamma().window(1);
    for (const auto& a : w) {
      if (!mu(GroupElement::zero(t->rank()), a).is_one() || !mu(a, GroupElement::zero(t->rank())).is_one())
        throw CompatibilityError("mu is not normalized", GroupElement::zero(t->rank()), a);
      for (const auto& b : w) {
        if (!(mu(a, b) == mu(b, a))) throw CompatibilityError("mu is not symmetric", a, b);
        for (const auto& d : w)
          if (!(mu(a + b, d) * mu(a, b) == mu(a, b + d) * mu(b, d)))
            throw CompatibilityError("mu fails the cocycle identity at third argument " + d.to_string(), a, b);
      }
    }
  }
  auto fn = [t, q, mu](const GroupElement& s, const GroupElement& u) { return lambda_albert(*t, q, mu, s, u); };
  return Cocycle::function(Cocycle::Kind::albert, t->rank(), q.field(), t->delta(), fn, "albert");
}

// ------------------------------------------------------------------ Deg3Torus

std::shared_ptr<const Deg3Torus> Deg3Torus::build(std::shared_ptr<const AlbertTriple> t, GammaCocycle mu) {
  const CheckReport v = validate_albert_triple(*t);
  if (!v.passed()) throw ConstructionError("invalid albert triple: " + v.witness->description);
  std::shared_ptr<Deg3Torus> d(new Deg3Torus());
  d->cocycle_ = albert_cocycle(t, Scalar::omega(), std::move(mu));
  d->triple_ = std::move(t);
  return d;
}

std::array<AssocElement, 9> Deg3Torus::coordinates(const AssocElement& a) const {
  if (a.handle() != cocycle_) throw HandleMismatchError("element of another algebra");
  std::array<AssocElement, 9> out{zero(), zero(), zero(), zero(), zero(), zero(), zero(), zero(), zero()};
  for (const auto& [s, c] : a.terms()) {
    const AlbertDecomposition d = triple_->decompose(s);
    if (d.k != 0) throw DecompositionError(s.to_string() + " is not in Delta");
    out[static_cast<std::size_t>(3 * d.i + d.j)].add_term(d.gamma, c);
  }
  return out;
}

AssocElement Deg3Torus::from_coordinates(const std::array<AssocElement, 9>& c) const {
  AssocElement out = zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out += c[static_cast<std::size_t>(3 * i + j)] * z_basis(i, j);
  return out;
}

bool Deg3Torus::is_central(const AssocElement& a) const {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [&](const auto& kv) { return triple_->gamma().contains(kv.first); });
}

// ---------------------------------------------------------- CubicNormStructure

std::vector<std::vector<AssocElement>> CubicNormStructure::left_multiplication(const AssocElement& x) const {
  std::vector<std::vector<AssocElement>> m(9, std::vector<AssocElement>(9, a_->zero()));
  for (int c = 0; c < 9; ++c) {
    const auto coords = a_->coordinates(x * a_->z_basis(c / 3, c % 3));
    for (std::size_t r = 0; r < 9; ++r) m[r][static_cast<std::size_t>(c)] = coords[r];
  }
  return m;
}

std::vector<AssocElement> CubicNormStructure::charpoly(const AssocElement& x) const {
  // Faddeev-LeVerrier over the commutative ring Z (division only by integers).
  const auto a = left_multiplication(x);
  const std::size_t n = 9;
  std::vector<AssocElement> p(n + 1, a_->zero());
  p[n] = a_->one();
  std::vector<std::vector<AssocElement>> m(n, std::vector<AssocElement>(n, a_->zero()));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<AssocElement>> next(n, std::vector<AssocElement>(n, a_->zero()));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        AssocElement acc = a_->zero();
        for (std::size_t l = 0; l < n; ++l)
          if (!a[r][l].is_zero() && !m[l][c].is_zero()) acc += a[r][l] * m[l][c];
        if (r == c) acc += p[n - k + 1];
        next[r][c] = std::move(acc);
      }
    m = std::move(next);
    AssocElement tr = a_->zero();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t l = 0; l < n; ++l)
        if (!a[r][l].is_zero() && !m[l][r].is_zero()) tr += a[r][l] * m[l][r];
    p[n - k] = tr.scaled(Rational(-1, static_cast<long>(k)));
  }
  return p;
}

namespace {

std::vector<AssocElement> poly_mul(const std::vector<AssocElement>& f, const std::vector<AssocElement>& g,
                                   const AssocElement& zero) {
  std::vector<AssocElement> out(f.size() + g.size() - 1, zero);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

}  // namespace

CubicData CubicNormStructure::via_charpoly(const AssocElement& x) const {
  const auto p = charpoly(x);
  const Rational third(1, 3);
  AssocElement a = p[8].scaled(third);
  AssocElement b = (p[7] - (a * a).scaled(Rational(3))).scaled(third);
  AssocElement c = (p[6] - (a * b).scaled(Rational(6)) - a * a * a).scaled(third);
  const std::vector<AssocElement> m{c, b, a, a_->one()};
  const auto cube = poly_mul(poly_mul(m, m, a_->zero()), m, a_->zero());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(cube[i] == p[i]))
      throw DecompositionError("characteristic polynomial is not a cube (coefficient " + std::to_string(i) + ")");
  return CubicData{-a, b, -c};
}

AssocElement CubicNormStructure::trace(const AssocElement& x) const {
  return a_->coordinates(x)[0].scaled(Rational(3));
}

AssocElement CubicNormStructure::spur(const AssocElement& x) const {
  const AssocElement t = trace(x);
  return (t * t - trace(x * x)).scaled(Rational(1, 2));
}

AssocElement CubicNormStructure::norm(const AssocElement& x) const {
  const AssocElement x2 = x * x;
  const AssocElement t = trace(x);
  const AssocElement t2 = trace(x2);
  const AssocElement t3 = trace(x2 * x);
  return (t * t * t - (t * t2).scaled(Rational(3)) + t3.scaled(Rational(2))).scaled(Rational(1, 6));
}

CubicData CubicNormStructure::data(const AssocElement& x) const { return CubicData{trace(x), spur(x), norm(x)}; }

AssocElement CubicNormStructure::adjoint(const AssocElement& x) const {
  return x * x - trace(x) * x + spur(x);
}

AssocElement CubicNormStructure::cross(const AssocElement& x, const AssocElement& y) const {
  const AssocElement tx = trace(x);
  const AssocElement ty = trace(y);
  return x * y + y * x - tx * y - ty * x + (tx * ty - trace(x * y));
}

// -------------------------------------------------------------- AlbertElement

AlbertElement::AlbertElement(AlbertHandle h, AssocElement x0, AssocElement x1, AssocElement x2)
    : h_(std::move(h)), x_{std::move(x0), std::move(x1), std::move(x2)} {
  for (const auto& c : x_)
    if (c.handle() != h_->base().handle()) throw HandleMismatchError("albert component from another algebra");
}

std::vector<GroupElement> AlbertElement::degrees() const {
  const GroupElement& s3 = h_->base().triple().sigma(2);
  std::vector<GroupElement> out;
  for (const auto& [d, c] : x_[0].terms()) out.push_back(d);
  for (const auto& [d, c] : x_[1].terms()) out.push_back(d + s3);
  for (const auto& [d, c] : x_[2].terms()) out.push_back(d - s3);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void AlbertElement::require_same(const AlbertElement& o) const {
  if (h_ != o.h_) throw HandleMismatchError("albert elements from different tori");
}

AlbertElement& AlbertElement::operator+=(const AlbertElement& o) {
  require_same(o);
  for (std::size_t i = 0; i < 3; ++i) x_[i] += o.x_[i];
  return *this;
}

AlbertElement& AlbertElement::operator-=(const AlbertElement& o) {
  require_same(o);
  for (std::size_t i = 0; i < 3; ++i) x_[i] -= o.x_[i];
  return *this;
}

AlbertElement AlbertElement::scaled(const Scalar& c) const {
  return AlbertElement(h_, x_[0].scaled(c), x_[1].scaled(c), x_[2].scaled(c));
}

AlbertElement AlbertElement::scaled(const Rational& r) const {
  return AlbertElement(h_, x_[0].scaled(r), x_[1].scaled(r), x_[2].scaled(r));
}

AlbertElement AlbertElement::central_scaled(const AssocElement& z) const {
  return AlbertElement(h_, z * x_[0], z * x_[1], z * x_[2]);
}

bool operator==(const AlbertElement& a, const AlbertElement& b) { return a.h_ == b.h_ && a.x_ == b.x_; }

std::string AlbertElement::to_string() const {
  return "(" + x_[0].to_string() + ", " + x_[1].to_string() + ", " + x_[2].to_string() + ")";
}

// ---------------------------------------------------------------- AlbertTorus

AlbertTorus::AlbertTorus(Deg3Handle a, AssocElement u3)
    : a_(a), cubic_(a), u3_(std::move(u3)), u3_inv_(invert_homogeneous(u3_)) {}

AlbertHandle AlbertTorus::first_tits(Deg3Handle a, const AssocElement& u3) {
  if (u3.handle() != a->handle()) throw HandleMismatchError("u3 belongs to another algebra");
  if (u3.is_zero()) throw ConstructionError("u3 must be nonzero");
  if (!u3.is_homogeneous()) throw ConstructionError("u3 must be homogeneous");
  const auto& t = a->triple();
  if (!t.gamma().contains(u3.degree() - 3 * t.sigma(2)))
    throw ConstructionError("u3 has degree " + u3.degree().to_string() + ", outside 3 sigma_3 + Gamma");
  if (!a->is_central(u3)) throw ConstructionError("u3 is not central");
  return AlbertHandle(new AlbertTorus(std::move(a), u3));
}

AlbertElement AlbertTorus::make(AssocElement x0, AssocElement x1, AssocElement x2) const {
  return AlbertElement(shared_from_this(), std::move(x0), std::move(x1), std::move(x2));
}

AlbertElement AlbertTorus::zero() const { return make(a_->zero(), a_->zero(), a_->zero()); }

AlbertElement AlbertTorus::unit() const { return make(a_->one(), a_->zero(), a_->zero()); }

AssocElement AlbertTorus::u_of(const GroupElement& d) const {
  const AlbertDecomposition dec = a_->triple().decompose(d);
  if (dec.k != 0) throw DecompositionError(d.to_string() + " is not in Delta");
  const GroupElement three_s3 = 3 * a_->triple().sigma(2);
  const AssocElement ug = dec.gamma == three_s3 ? u3_ : a_->x(dec.gamma);
  return a_->z_basis(dec.i, dec.j) * ug;
}

AlbertElement AlbertTorus::t_alpha(const GroupElement& alpha) const {
  const AlbertDecomposition dec = a_->triple().decompose(alpha);
  const GroupElement& s3 = a_->triple().sigma(2);
  switch (dec.k) {
    case 0:
      return make(u_of(alpha), a_->zero(), a_->zero());
    case 1:
      return make(a_->zero(), u_of(alpha - s3), a_->zero());
    default:
      return make(a_->zero(), a_->zero(), u_of(alpha + s3));
  }
}

AssocElement AlbertTorus::trace(const AlbertElement& x) const { return cubic_.trace(x[0]); }

AssocElement AlbertTorus::bilinear_trace(const AlbertElement& x, const AlbertElement& y) const {
  return cubic_.trace(x[0] * y[0]) + cubic_.trace(x[1] * y[2]) + cubic_.trace(x[2] * y[1]);
}

AssocElement AlbertTorus::norm(const AlbertElement& x) const {
  return cubic_.norm(x[0]) + u3_ * cubic_.norm(x[1]) + u3_inv_ * cubic_.norm(x[2]) - cubic_.trace(x[0] * x[1] * x[2]);
}

AlbertElement AlbertTorus::adjoint(const AlbertElement& x) const {
  return make(cubic_.adjoint(x[0]) - x[1] * x[2], u3_inv_ * cubic_.adjoint(x[2]) - x[0] * x[1],
              u3_ * cubic_.adjoint(x[1]) - x[2] * x[0]);
}

AssocElement AlbertTorus::spur(const AlbertElement& x) const { return trace(adjoint(x)); }

AlbertElement AlbertTorus::cross(const AlbertElement& x, const AlbertElement& y) const {
  return make(cubic_.cross(x[0], y[0]) - x[1] * y[2] - y[1] * x[2],
              u3_inv_ * cubic_.cross(x[2], y[2]) - x[0] * y[1] - y[0] * x[1],
              u3_ * cubic_.cross(x[1], y[1]) - x[2] * y[0] - y[2] * x[0]);
}

AlbertElement AlbertTorus::product(const AlbertElement& x, const AlbertElement& y) const {
  const AlbertElement c = cross(x, y);
  const AssocElement s = trace(c);
  AlbertElement out = c + y.central_scaled(trace(x)) + x.central_scaled(trace(y));
  out -= unit().central_scaled(s);
  return out.scaled(Rational(1, 2));
}

AlbertElement AlbertTorus::invert(const AlbertElement& x) const {
  if (x.is_zero()) throw ZeroElementError("zero element has no inverse");
  if (x.degrees().size() != 1) throw NotInvertibleError("only homogeneous albert elements have a certified inverse");
  const AssocElement n = norm(x);
  if (n.is_zero()) throw NotInvertibleError("norm vanishes on " + x.to_string());
  return adjoint(x).central_scaled(invert_homogeneous(n));
}

// ------------------------------------------------------------- grading check

CheckReport albert_grading_check(const AlbertTorus& t, std::int64_t bound) {
  CheckReport rep;
  rep.name = "albert-grading";
  const auto window = window_points(t.rank(), bound);
  std::vector<AlbertElement> basis;
  basis.reserve(window.size());
  std::set<GroupElement> cosets;
  for (const auto& a : window) {
    basis.push_back(t.t_alpha(a));
    cosets.insert(t.base().triple().gamma().reduce(a));
    const auto deg = basis.back().degrees();
    if (deg.size() != 1 || deg.front() != a) {
      rep.fail(Witness{"t_alpha is not homogeneous of degree alpha", {a}, {basis.back().to_string()}});
      return rep;
    }
  }
  struct Row {
    std::uint64_t checked = 0;
    std::optional<Witness> bad;
  };
  std::vector<Row> rows(window.size());
  parallel_for(window.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < window.size() && !rows[i].bad; ++j) {
      ++rows[i].checked;
      const AlbertElement p = t.product(basis[i], basis[j]);
      const AlbertElement target = t.t_alpha(window[i] + window[j]);
      // target has exactly one term; read r off that position
      std::size_t comp = 0;
      while (target[comp].is_zero()) ++comp;
      const auto& [deg, coef] = *target[comp].terms().begin();
      const Scalar r = p[comp].coefficient(deg) / coef;
      if (r.is_zero()) {
        rows[i].bad = Witness{"t_a . t_b = 0", {window[i], window[j]}, {p.to_string()}};
      } else if (!(p == target.scaled(r))) {
        rows[i].bad = Witness{"t_a . t_b is not a multiple of t_{a+b}", {window[i], window[j]}, {p.to_string()}};
      }
    }
  });
  for (const auto& r : rows) {
    rep.checked += r.checked;
    if (r.bad && rep.verdict != Verdict::fail) rep.fail(*r.bad);
  }
  if (rep.verdict != Verdict::fail) rep.verdict = Verdict::window_verified;
  std::ostringstream os;
  os << rep.checked << " pairs over window radius " << bound << ", " << cosets.size() << " Gamma-cosets";
  rep.detail = os.str();
  return rep;
}

namespace {

AssocElement random_element(const Deg3Torus& a, std::size_t terms, std::mt19937_64& rng) {
  const auto& basis = a.handle()->domain().basis();
  std::uniform_int_distribution<std::int64_t> coord(-1, 1);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  AssocElement out = a.zero();
  for (std::size_t k = 0; k < terms; ++k) {
    GroupElement g(a.triple().rank());
    for (const auto& b : basis) g += coord(rng) * b;
    Scalar c(a.field(), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    if (c.is_zero()) c = Scalar::one(a.field());
    out.add_term(g, c);
  }
  return out;
}

}  // namespace

CheckReport cubic_norm_check(const AlbertTorus& t, std::uint64_t samples, std::uint64_t seed) {
  CheckReport rep;
  rep.name = "cubic-norm";
  const Deg3Torus& a = t.base();
  const CubicNormStructure& cubic = t.cubic();
  std::mt19937_64 rng(seed);

  std::vector<AssocElement> xs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) xs.push_back(a.z_basis(i, j));
  for (std::uint64_t k = 0; k < samples; ++k) xs.push_back(random_element(a, 3, rng));
  std::vector<AlbertElement> ys;
  for (std::uint64_t k = 0; k < samples; ++k)
    ys.push_back(t.make(random_element(a, 2, rng), random_element(a, 2, rng), random_element(a, 2, rng)));

  std::vector<std::optional<Witness>> bad(xs.size() + ys.size());
  parallel_for(bad.size(), [&](std::size_t n) {
    try {
      if (n < xs.size()) {
        const AssocElement& x = xs[n];
        const CubicData slow = cubic.via_charpoly(x);
        const CubicData fast = cubic.data(x);
        if (!(slow.trace == fast.trace && slow.spur == fast.spur && slow.norm == fast.norm)) {
          bad[n] = Witness{"charpoly and power-trace routes disagree", {}, {x.to_string()}};
          return;
        }
        if (n < 9 && n > 0 && !slow.trace.is_zero()) {
          bad[n] = Witness{"trace of u1^i u2^j is nonzero", {}, {x.to_string(), slow.trace.to_string()}};
          return;
        }
        const AssocElement x2 = x * x;
        if (!(x2 * x - slow.trace * x2 + slow.spur * x - slow.norm).is_zero()) {
          bad[n] = Witness{"x^3 - T x^2 + S x - N != 0 in A", {}, {x.to_string()}};
          return;
        }
        if (!(cubic.adjoint(cubic.adjoint(x)) == slow.norm * x))
          bad[n] = Witness{"x## != N(x) x in A", {}, {x.to_string()}};
        return;
      }
      const AlbertElement& y = ys[n - xs.size()];
      const AssocElement norm = t.norm(y);
      if (!(t.adjoint(t.adjoint(y)) == y.central_scaled(norm))) {
        bad[n] = Witness{"x## != N(x) x in the Tits algebra", {}, {y.to_string()}};
        return;
      }
      const AlbertElement y2 = t.product(y, y);
      const AlbertElement ch = t.product(y2, y) - y2.central_scaled(t.trace(y)) + y.central_scaled(t.spur(y)) -
                               t.unit().central_scaled(norm);
      if (!ch.is_zero()) bad[n] = Witness{"Cayley-Hamilton fails in the Tits algebra", {}, {y.to_string()}};
    } catch (const Error& e) {
      bad[n] = Witness{std::string("cubic data failed: ") + e.what(), {}, {}};
    }
  });
  rep.checked = bad.size();
  rep.sampled = samples > 0;
  for (auto& w : bad)
    if (w) {
      rep.fail(std::move(*w));
      break;
    }
  std::ostringstream os;
  os << xs.size() << " elements of A (9 basis, " << samples << " random), " << ys.size()
     << " random elements of the Tits algebra";
  rep.detail = os.str();
  return rep;
}

}  // namespace toruslab
