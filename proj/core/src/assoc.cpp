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

#include "toruslab/assoc.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "toruslab/parallel.hpp"

namespace toruslab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::window_verified:
      return "window-verified";
    case Verdict::informative:
      return "informative";
  }
  return "?";
}

// ---------------------------------------------------------------- QuantumMatrix

QuantumMatrix::QuantumMatrix(std::vector<std::vector<Scalar>> entries) : q_(std::move(entries)) {
  const std::size_t n = q_.size();
  if (n == 0) throw ConstructionError("quantum matrix must be at least 1x1");
  const FieldDescriptor f = q_[0][0].field();
  for (std::size_t i = 0; i < n; ++i) {
    if (q_[i].size() != n) throw DimensionError("quantum matrix is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (!(q_[i][j].field() == f)) throw ScalarError("quantum matrix mixes fields");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!q_[i][i].is_one())
      throw ConstructionError("quantum matrix needs q_ii = 1; q_" + std::to_string(i + 1) + std::to_string(i + 1) +
                              " = " + q_[i][i].to_string());
    for (std::size_t j = i + 1; j < n; ++j) {
      if (q_[i][j].is_zero() || !(q_[i][j] * q_[j][i]).is_one())
        throw ConstructionError("quantum matrix needs q_ij q_ji = 1; fails at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
    }
  }
}

QuantumMatrix QuantumMatrix::trivial(std::size_t n, const FieldDescriptor& f) {
  return QuantumMatrix(std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::one(f))));
}

QuantumMatrix QuantumMatrix::single(std::size_t n, std::size_t i, std::size_t j, const Scalar& value) {
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::one(value.field())));
  m[i][j] = value;
  m[j][i] = value.inverse();
  return QuantumMatrix(std::move(m));
}

bool QuantumMatrix::elementary() const {
  for (const auto& row : q_)
    for (const auto& x : row)
      if (!x.is_one() && !(-x).is_one()) return false;
  return true;
}

// --------------------------------------------------------------------- Cocycle

namespace {

void require_rank(std::size_t want, std::size_t got, const char* what) {
  if (want != got)
    throw DimensionError(std::string(what) + ": expected rank " + std::to_string(want) + ", got " +
                         std::to_string(got));
}

}  // namespace

CocyclePtr Cocycle::bicharacter(std::vector<std::vector<Scalar>> b) {
  const std::size_t n = b.size();
  if (n == 0) throw ConstructionError("bicharacter matrix must be at least 1x1");
  const FieldDescriptor f = b[0][0].field();
  std::shared_ptr<Cocycle> c(new Cocycle());
  c->kind_ = Kind::bicharacter;
  c->rank_ = n;
  c->field_ = f;
  c->domain_ = Subgroup::whole(n);
  c->label_ = "bicharacter";
  c->bichar_order_.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i].size() != n) throw DimensionError("bicharacter matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(b[i][j].field() == f)) throw ScalarError("bicharacter matrix mixes fields");
      if (b[i][j].is_zero()) throw ConstructionError("bicharacter entries must be nonzero");
      if (auto k = is_root_of_unity(b[i][j])) c->bichar_order_[i][j] = *k;
    }
  }
  c->bichar_ = std::move(b);
  return c;
}

CocyclePtr Cocycle::quantum(const QuantumMatrix& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<Scalar>> b(n, std::vector<Scalar>(n, Scalar::one(q.field())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) b[i][j] = q(i, j);
  auto base = bicharacter(std::move(b));
  std::shared_ptr<Cocycle> c(new Cocycle(*base));
  c->kind_ = Kind::quantum;
  c->label_ = "quantum";
  c->quantum_ = q;
  return c;
}

CocyclePtr Cocycle::trivial(std::size_t n, const FieldDescriptor& f) { return quantum(QuantumMatrix::trivial(n, f)); }

CocyclePtr Cocycle::table(std::size_t n, const FieldDescriptor& f, std::map<PairKey, Scalar> entries) {
  std::shared_ptr<Cocycle> c(new Cocycle());
  c->kind_ = Kind::table;
  c->rank_ = n;
  c->field_ = f;
  c->domain_ = Subgroup::whole(n);
  c->label_ = "table";
  for (const auto& [k, v] : entries) {
    require_rank(n, k.first.rank(), "table cocycle key");
    require_rank(n, k.second.rank(), "table cocycle key");
    if (!(v.field() == f)) throw ScalarError("table cocycle value in the wrong field");
    if (v.is_zero()) throw ConstructionError("table cocycle value at " + k.first.to_string() + "," +
                                             k.second.to_string() + " is zero");
  }
  c->table_ = std::move(entries);
  return c;
}

CocyclePtr Cocycle::function(Kind kind, std::size_t n, const FieldDescriptor& f, Subgroup domain, Evaluator fn,
                             std::string label) {
  require_rank(n, domain.rank(), "cocycle domain");
  std::shared_ptr<Cocycle> c(new Cocycle());
  c->kind_ = kind;
  c->rank_ = n;
  c->field_ = f;
  c->domain_ = std::move(domain);
  c->label_ = std::move(label);
  c->fn_ = std::move(fn);
  return c;
}

CocyclePtr Cocycle::coboundary_twist(CocyclePtr base, std::function<Scalar(const GroupElement&)> d) {
  auto fn = [base, d](const GroupElement& s, const GroupElement& t) {
    return d(s) * d(t) / d(s + t) * (*base)(s, t);
  };
  return function(Kind::function, base->rank(), base->field(), base->domain(), fn, base->label() + "+coboundary");
}

CocyclePtr Cocycle::perturbed(CocyclePtr base, const GroupElement& s, const GroupElement& t, const Scalar& factor) {
  if (base->kind() == Kind::table) {
    auto entries = base->table_entries();
    auto it = entries.find({s, t});
    if (it == entries.end()) throw ConstructionError("no table entry at " + s.to_string() + "," + t.to_string());
    it->second *= factor;
    return table(base->rank(), base->field(), std::move(entries));
  }
  auto fn = [base, s, t, factor](const GroupElement& a, const GroupElement& b) {
    Scalar v = (*base)(a, b);
    if (a == s && b == t) v *= factor;
    return v;
  };
  return function(Kind::function, base->rank(), base->field(), base->domain(), fn, base->label() + "+perturbed");
}

Scalar Cocycle::eval_bicharacter(const GroupElement& s, const GroupElement& t) const {
  Scalar acc = Scalar::one(field_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (s[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (t[j] == 0 || bichar_[i][j].is_one()) continue;
      std::int64_t e = s[i] * t[j];
      if (const long k = bichar_order_[i][j]; k > 0) e = floor_mod(e, k);
      if (e != 0) acc *= bichar_[i][j].pow(e);
    }
  }
  return acc;
}

Scalar Cocycle::operator()(const GroupElement& s, const GroupElement& t) const {
  require_rank(rank_, s.rank(), "cocycle argument");
  require_rank(rank_, t.rank(), "cocycle argument");
  switch (kind_) {
    case Kind::quantum:
    case Kind::bicharacter:
      return eval_bicharacter(s, t);
    case Kind::table: {
      auto it = table_.find({s, t});
      if (it == table_.end())
        throw Error("table cocycle has no value at (" + s.to_string() + ", " + t.to_string() + ")");
      return it->second;
    }
    case Kind::albert:
    case Kind::function:
      return fn_(s, t);
  }
  return Scalar::one(field_);
}

bool Cocycle::defined(const GroupElement& s, const GroupElement& t) const {
  if (s.rank() != rank_ || t.rank() != rank_) return false;
  if (kind_ == Kind::table) return table_.count({s, t}) > 0;
  return domain_.contains(s) && domain_.contains(t);
}

Scalar commutation_factor(const Cocycle& c, const GroupElement& s, const GroupElement& t) {
  return c(s, t) / c(t, s);
}

// ---------------------------------------------------------- windowed machinery

namespace {

/// Coefficient box [-R, R]^r over a subgroup basis with dense indexing.
struct Box {
  std::size_t r = 0;
  std::int64_t radius = 0;
  std::int64_t side = 1;
  std::vector<GroupElement> points;              // ambient points, in index order
  std::vector<std::vector<std::int64_t>> coeffs;  // coefficient vectors, in index order

  Box(const std::vector<GroupElement>& basis, std::size_t ambient, std::int64_t radius_)
      : r(basis.size()), radius(radius_), side(2 * radius_ + 1) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < r; ++k) total *= static_cast<std::size_t>(side);
    points.reserve(total);
    coeffs.reserve(total);
    std::vector<std::int64_t> c(r, -radius);
    for (std::size_t idx = 0; idx < total; ++idx) {
      GroupElement p(ambient);
      for (std::size_t k = 0; k < r; ++k) p += c[k] * basis[k];
      points.push_back(std::move(p));
      coeffs.push_back(c);
      for (std::size_t k = 0; k < r; ++k) {  // little-endian odometer: index = sum (c_k + R) side^k
        if (++c[k] <= radius) break;
        c[k] = -radius;
      }
    }
  }
  std::size_t size() const { return points.size(); }
  /// Index of a coefficient vector given as a linear part plus offset.
  std::int64_t linear(const std::vector<std::int64_t>& c) const {
    std::int64_t acc = 0, m = 1;
    for (std::size_t k = 0; k < r; ++k) {
      acc += c[k] * m;
      m *= side;
    }
    return acc;
  }
  std::int64_t offset() const {
    std::int64_t acc = 0, m = 1;
    for (std::size_t k = 0; k < r; ++k) {
      acc += radius * m;
      m *= side;
    }
    return acc;
  }
};

std::uint64_t cube(std::uint64_t x) { return x * x * x; }

}  // namespace

CheckReport cocycle_identity_check(const Cocycle& c, std::int64_t bound, std::uint64_t sample_cap,
                                   std::uint64_t seed) {
  if (bound < 1) throw Error("cocycle_identity_check needs bound >= 1");
  CheckReport rep;
  rep.name = "cocycle-identity";
  const auto& basis = c.domain().basis();
  const Box w(basis, c.rank(), bound);
  const Box w2(basis, c.rank(), 2 * bound);
  const std::size_t nw = w.size();
  std::vector<std::int64_t> lin2(nw);
  for (std::size_t i = 0; i < nw; ++i) lin2[i] = w2.linear(w.coeffs[i]);
  const std::int64_t off2 = w2.offset();
  const bool is_table = c.kind() == Cocycle::Kind::table;

  // Cached values: a[i2 * nw + j] = lambda(w2_i2, w_j), b[i * n2 + j2] = lambda(w_i, w2_j2).
  const std::size_t n2 = w2.size();
  const bool cache = !is_table && n2 * nw <= 4'000'000;
  std::vector<Scalar> a, b;
  if (cache) {
    a.resize(n2 * nw);
    b.resize(nw * n2);
    parallel_for(n2, [&](std::size_t i2) {
      for (std::size_t j = 0; j < nw; ++j) {
        a[i2 * nw + j] = c(w2.points[i2], w.points[j]);
        b[j * n2 + i2] = c(w.points[j], w2.points[i2]);
      }
    });
  }

  struct Outcome {
    bool failed = false;
    std::uint64_t order = 0;
    Witness witness;
    std::uint64_t checked = 0;
  };

  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k, Outcome& out, std::uint64_t order) {
    const auto& s = w.points[i];
    const auto& t = w.points[j];
    const auto& d = w.points[k];
    Scalar lhs, rhs;
    if (cache) {
      const auto st = static_cast<std::size_t>(lin2[i] + lin2[j] + off2);
      const auto td = static_cast<std::size_t>(lin2[j] + lin2[k] + off2);
      const auto si = static_cast<std::size_t>(lin2[i] + off2);
      const auto ti = static_cast<std::size_t>(lin2[j] + off2);
      lhs = a[st * nw + k] * a[si * nw + j];
      rhs = b[i * n2 + td] * a[ti * nw + k];
    } else {
      if (is_table && !(c.defined(s + t, d) && c.defined(s, t) && c.defined(s, t + d) && c.defined(t, d))) return;
      lhs = c(s + t, d) * c(s, t);
      rhs = c(s, t + d) * c(t, d);
    }
    ++out.checked;
    if (!(lhs == rhs) && (!out.failed || order < out.order)) {
      out.failed = true;
      out.order = order;
      out.witness = Witness{"lambda(s+t,d) lambda(s,t) != lambda(s,t+d) lambda(t,d)", {s, t, d},
                            {lhs.to_string(), rhs.to_string()}};
    }
  };

  std::vector<Outcome> outcomes;
  const std::uint64_t total = cube(nw);
  if (total <= sample_cap) {
    outcomes.resize(nw);
    parallel_for(nw, [&](std::size_t i) {
      for (std::size_t j = 0; j < nw; ++j)
        for (std::size_t k = 0; k < nw; ++k) check_triple(i, j, k, outcomes[i], (i * nw + j) * nw + k);
    });
  } else {
    rep.sampled = true;
    outcomes.resize(1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, nw - 1);
    for (std::uint64_t n = 0; n < sample_cap; ++n) {
      const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      check_triple(i, j, k, outcomes[0], n);
    }
  }
  const Outcome* first = nullptr;
  for (const auto& o : outcomes) {
    rep.checked += o.checked;
    if (o.failed && (!first || o.order < first->order)) first = &o;
  }
  if (first) {
    rep.fail(first->witness);
  } else {
    rep.verdict = Verdict::window_verified;
  }
  std::ostringstream os;
  os << (rep.sampled ? "sampled " : "all ") << rep.checked << " triples, domain window radius " << bound;
  rep.detail = os.str();
  return rep;
}

// ---------------------------------------------------------------- AssocElement

AssocElement::AssocElement(CocyclePtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw Error("null algebra handle");
}

AssocElement AssocElement::monomial(CocyclePtr algebra, const GroupElement& s, const Scalar& c) {
  AssocElement e(std::move(algebra));
  e.add_term(s, c);
  return e;
}

AssocElement AssocElement::basis(CocyclePtr algebra, const GroupElement& s) {
  const auto f = algebra->field();
  return monomial(std::move(algebra), s, Scalar::one(f));
}

AssocElement AssocElement::one(CocyclePtr algebra) {
  const std::size_t n = algebra->rank();
  return basis(std::move(algebra), GroupElement::zero(n));
}

AssocElement AssocElement::constant(CocyclePtr algebra, const Scalar& c) {
  const std::size_t n = algebra->rank();
  return monomial(std::move(algebra), GroupElement::zero(n), c);
}

const GroupElement& AssocElement::degree() const {
  if (terms_.size() != 1) throw NotInvertibleError("element is not homogeneous");
  return terms_.begin()->first;
}

Scalar AssocElement::coefficient(const GroupElement& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

void AssocElement::add_term(const GroupElement& s, const Scalar& c) {
  require_rank(algebra_->rank(), s.rank(), "element degree");
  if (c.is_zero()) return;
  if (!algebra_->domain().contains(s))
    throw DecompositionError("degree " + s.to_string() + " lies outside the algebra's grading group");
  const Scalar v = embed(c, field());
  auto [it, inserted] = terms_.try_emplace(s, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AssocElement::require_same(const AssocElement& o) const {
  if (algebra_ != o.algebra_) throw HandleMismatchError("elements belong to different algebras");
}

AssocElement& AssocElement::operator+=(const AssocElement& o) {
  require_same(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

AssocElement& AssocElement::operator-=(const AssocElement& o) {
  require_same(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

AssocElement AssocElement::operator-() const {
  AssocElement out(algebra_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
  return out;
}

AssocElement AssocElement::scaled(const Scalar& k) const {
  AssocElement out(algebra_);
  if (k.is_zero()) return out;
  const Scalar kk = embed(k, field());
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, c * kk);
  return out;
}

AssocElement AssocElement::scaled(const Rational& r) const {
  AssocElement out(algebra_);
  if (sgn(r) == 0) return out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, c.scaled(r));
  return out;
}

AssocElement operator*(const AssocElement& a, const AssocElement& b) {
  a.require_same(b);
  AssocElement out(a.algebra_);
  const Cocycle& lam = *a.algebra_;
  for (const auto& [s, x] : a.terms_)
    for (const auto& [t, y] : b.terms_) out.add_term(s + t, x * y * lam(s, t));
  return out;
}

bool operator==(const AssocElement& a, const AssocElement& b) {
  return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
}

std::string AssocElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << '(' << c.to_string() << ")*";
    os << "x^" << s.to_string();
  }
  return os.str();
}

AssocElement assoc_mul(const AssocElement& a, const AssocElement& b) { return a * b; }

AssocElement commutator(const AssocElement& a, const AssocElement& b) { return a * b - b * a; }

AssocElement invert_homogeneous(const AssocElement& a) {
  if (a.is_zero()) throw ZeroElementError("zero element has no inverse");
  if (!a.is_homogeneous())
    throw NotInvertibleError("only homogeneous elements have a certified inverse; got " +
                             std::to_string(a.terms().size()) + " terms");
  const auto& [s, c] = *a.terms().begin();
  return AssocElement::monomial(a.handle(), -s, (c * a.algebra()(s, -s)).inverse());
}

// ------------------------------------------------------- central grading group

Subgroup central_grading_group(const Cocycle& c) {
  const auto& basis = c.domain().basis();
  const std::size_t r = basis.size();
  std::vector<LinearCondition> conds;
  for (std::size_t l = 0; l < r; ++l) {
    LinearCondition sign{std::vector<std::int64_t>(r, 0), 2};
    LinearCondition omega{std::vector<std::int64_t>(r, 0), 3};
    std::map<mpz_class, std::vector<std::int64_t>> primes;
    for (std::size_t k = 0; k < r; ++k) {
      const ScalarFactorization f = factor_exponents(commutation_factor(c, basis[k], basis[l]));
      sign.coeffs[k] = f.sign;
      omega.coeffs[k] = f.omega_exp;
      for (const auto& [p, e] : f.primes) {
        auto& row = primes[p];
        if (row.empty()) row.assign(r, 0);
        row[k] = e;
      }
    }
    conds.push_back(std::move(sign));
    conds.push_back(std::move(omega));
    for (auto& [p, row] : primes) conds.push_back(LinearCondition{std::move(row), 0});
  }
  const Subgroup kernel = solve_conditions(r, conds);
  std::vector<GroupElement> gens;
  for (const auto& g : kernel.basis()) {
    GroupElement x(c.rank());
    for (std::size_t k = 0; k < r; ++k) x += g[k] * basis[k];
    gens.push_back(std::move(x));
  }
  return Subgroup(c.rank(), std::move(gens));
}

CheckReport centrality_cross_check(const Cocycle& c, const Subgroup& gamma, std::int64_t bound) {
  CheckReport rep;
  rep.name = "centrality";
  if (!c.domain().contains(gamma)) {
    rep.fail(Witness{"claimed central grading group is not inside the domain", {}, {gamma.to_string()}});
    return rep;
  }
  const auto window = c.domain().window(bound);
  const auto& basis = c.domain().basis();
  for (const auto& s : window) {
    if (gamma.contains(s)) {
      for (const auto& t : window) {
        ++rep.checked;
        const Scalar f = commutation_factor(c, s, t);
        if (!f.is_one()) {
          rep.fail(Witness{"element of the central grading group does not commute", {s, t}, {f.to_string()}});
          return rep;
        }
      }
    } else {
      ++rep.checked;
      const bool separated =
          std::any_of(basis.begin(), basis.end(), [&](const GroupElement& b) { return !commutation_factor(c, s, b).is_one(); });
      if (!separated) {
        rep.fail(Witness{"degree outside the central grading group commutes with every generator", {s}, {}});
        return rep;
      }
    }
  }
  rep.verdict = Verdict::window_verified;
  rep.detail = "domain window radius " + std::to_string(bound) + ", central grading group " + gamma.to_string();
  return rep;
}

// ------------------------------------------------------------ GradedInvolution

GradedInvolution GradedInvolution::from_quadratic_map(CocyclePtr c, QuadraticMapF2 q) {
  if (q.rank() != c->rank()) throw DimensionError("quadratic map rank does not match the cocycle");
  if (!q.is_canonical()) {
    if (q(GroupElement::zero(q.rank())) != 0) throw ConstructionError("quadratic map must vanish at 0");
    const auto chk = quadratic_map_check(q, 2);
    if (!chk.biadditive)
      throw CompatibilityError("polar form of q is not biadditive at " + chk.witness_s->to_string() + ", " +
                                   chk.witness_t->to_string() + ", " + chk.witness_d->to_string(),
                               *chk.witness_s, *chk.witness_t);
  }
  const auto& basis = c->domain().basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t l = k; l < basis.size(); ++l) {
      const Scalar lt = commutation_factor(*c, basis[k], basis[l]);
      const Scalar sign = Scalar::integer(c->field(), q.beta(basis[k], basis[l]) ? -1 : 1);
      if (!(lt == sign))
        throw CompatibilityError("(-1)^beta_q(" + basis[k].to_string() + ", " + basis[l].to_string() + ") = " +
                                     sign.to_string() + " but lambda_t = " + lt.to_string(),
                                 basis[k], basis[l]);
    }
  }
  return GradedInvolution(std::move(c), std::move(q), false);
}

GradedInvolution GradedInvolution::semilinear(CocyclePtr c) {
  if (!c->field().is_extension())
    throw ConstructionError("semilinear involution needs a quadratic extension field, got " + c->field().name());
  auto check = [&](const GroupElement& s, const GroupElement& t) {
    const Scalar a = (*c)(s, t).conjugate();
    const Scalar b = (*c)(t, s);
    if (!(a == b))
      throw CompatibilityError("conj(lambda(" + s.to_string() + ", " + t.to_string() + ")) = " + a.to_string() +
                                   " but lambda(" + t.to_string() + ", " + s.to_string() + ") = " + b.to_string(),
                               s, t);
  };
  const auto& basis = c->domain().basis();
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t l = k; l < basis.size(); ++l) check(basis[k], basis[l]);
  if (c->kind() != Cocycle::Kind::bicharacter && c->kind() != Cocycle::Kind::quantum) {
    const auto w = c->domain().window(1);
    for (const auto& s : w)
      for (const auto& t : w)
        if (s <= t) check(s, t);
  }
  const std::size_t n = c->rank();
  return GradedInvolution(std::move(c), QuadraticMapF2::zero(n), true);
}

bool GradedInvolution::fixes_basis(const GroupElement& s) const { return semilinear_ || q_(s) == 0; }

AssocElement GradedInvolution::apply(const AssocElement& a) const {
  if (a.handle() != cocycle_) throw HandleMismatchError("involution applied to an element of another algebra");
  AssocElement out(cocycle_);
  for (const auto& [s, c] : a.terms()) {
    if (semilinear_)
      out.add_term(s, c.conjugate());
    else
      out.add_term(s, q_(s) ? -c : c);
  }
  return out;
}

std::vector<AssocElement> GradedInvolution::hermitian_part_basis(std::int64_t bound) const {
  std::vector<AssocElement> out;
  for (const auto& s : cocycle_->domain().window(bound))
    if (fixes_basis(s)) out.push_back(AssocElement::basis(cocycle_, s));
  return out;
}

CheckReport involution_check(const GradedInvolution& theta, std::int64_t bound) {
  CheckReport rep;
  rep.name = "involution";
  const CocyclePtr& c = theta.handle();
  const auto window = c->domain().window(bound);
  const FieldDescriptor& f = c->field();
  const Scalar lead = f.is_extension() ? Scalar(f, 1, 1) : Scalar::one(f);
  std::vector<std::optional<Witness>> bad(window.size());
  parallel_for(window.size(), [&](std::size_t i) {
    const AssocElement a = AssocElement::monomial(c, window[i], lead);
    if (!(theta.apply(theta.apply(a)) == a)) {
      bad[i] = Witness{"theta is not of period 2", {window[i]}, {}};
      return;
    }
    const bool a_fixed = theta.fixes_basis(window[i]);
    const AssocElement fa = AssocElement::basis(c, window[i]);
    for (const auto& t : window) {
      const AssocElement b = AssocElement::basis(c, t);
      if (!(theta.apply(a * b) == theta.apply(b) * theta.apply(a))) {
        bad[i] = Witness{"theta(ab) != theta(b) theta(a)", {window[i], t}, {}};
        return;
      }
      if (a_fixed && theta.fixes_basis(t) && !theta.is_fixed(fa * b + b * fa)) {
        bad[i] = Witness{"product of fixed elements is not fixed", {window[i], t}, {}};
        return;
      }
    }
  });
  rep.checked = static_cast<std::uint64_t>(window.size()) * window.size();
  for (auto& w : bad)
    if (w) {
      rep.fail(std::move(*w));
      break;
    }
  if (rep.passed()) rep.verdict = Verdict::window_verified;
  rep.detail = std::to_string(window.size()) + " basis elements, all pairs";
  return rep;
}

}  // namespace toruslab
