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

#include "toruslab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "toruslab/errors.hpp"

namespace toruslab {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("lattice arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t add_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  return checked(static_cast<__int128>(a) + static_cast<__int128>(q) * b);
}

void require_rank(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    std::ostringstream os;
    os << what << ": rank " << got << " does not match ambient rank " << expected;
    throw DimensionError(os.str());
  }
}

// Extended gcd with g >= 0 and s*a + t*b = g.
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::pair{b, a - q * b};
    std::tie(s0, s1) = std::pair{s1, add_mul(s0, -q, s1)};
    std::tie(t0, t1) = std::pair{t1, add_mul(t0, -q, t1)};
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

// ---------------------------------------------------------------- GroupElement

GroupElement GroupElement::unit(std::size_t rank, std::size_t i) {
  GroupElement e(rank);
  e.coords_.at(i) = 1;
  return e;
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  require_rank(rank(), other.rank(), "group addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = add_mul(coords_[i], 1, other.coords_[i]);
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& other) {
  require_rank(rank(), other.rank(), "group subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = add_mul(coords_[i], -1, other.coords_[i]);
  return *this;
}

GroupElement GroupElement::operator-() const {
  GroupElement r(*this);
  for (auto& c : r.coords_) c = checked(-static_cast<__int128>(c));
  return r;
}

GroupElement operator*(std::int64_t k, const GroupElement& a) {
  GroupElement r(a);
  for (auto& c : r.coords_) c = checked(static_cast<__int128>(c) * k);
  return r;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto c : g.coords()) {
    h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// -------------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const GroupElement> cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_rank(rows, cols[c].rank(), "matrix column");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = add_mul(out(i, j), a, rhs(k, j));
    }
  return out;
}

GroupElement IntMatrix::apply(const GroupElement& x) const {
  require_rank(cols_, x.rank(), "matrix application");
  GroupElement y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] = add_mul(y[i], (*this)(i, j), x[j]);
  return y;
}

GroupElement IntMatrix::column(std::size_t c) const {
  GroupElement v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

// ------------------------------------------------------------------------- SNF

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols), {}, 0};
  auto& D = f.D;
  auto& U = f.U;
  auto& V = f.V;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(U(a, j), U(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(V(i, a), V(i, b));
  };
  // row_dst += q * row_src
  auto row_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t j = 0; j < cols; ++j) D(dst, j) = add_mul(D(dst, j), q, D(src, j));
    for (std::size_t j = 0; j < rows; ++j) U(dst, j) = add_mul(U(dst, j), q, U(src, j));
  };
  auto col_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t i = 0; i < rows; ++i) D(i, dst) = add_mul(D(i, dst), q, D(i, src));
    for (std::size_t i = 0; i < cols; ++i) V(i, dst) = add_mul(V(i, dst), q, V(i, src));
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    bool empty = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block.
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const auto v = D(i, j);
          if (v != 0 && (best == 0 || std::llabs(v) < best)) {
            best = std::llabs(v);
            pr = i;
            pc = j;
          }
        }
      if (best == 0) {
        empty = true;
        break;
      }
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        row_op(i, t, -(D(i, t) / D(t, t)));
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        col_op(j, t, -(D(t, j) / D(t, t)));
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_op(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (empty) break;
    if (D(t, t) < 0) row_op(t, t, -2);
  }
  f.diagonal.resize(diag);
  for (std::size_t t = 0; t < diag; ++t) {
    f.diagonal[t] = D(t, t);
    if (D(t, t) != 0) ++f.rank;
  }
  return f;
}

// --------------------------------------------------------- QuotientDescription

std::optional<std::uint64_t> QuotientDescription::order() const {
  if (!finite()) return std::nullopt;
  std::uint64_t n = 1;
  for (auto d : torsion) n *= static_cast<std::uint64_t>(d);
  return n;
}

std::vector<std::int64_t> QuotientDescription::project(const GroupElement& x) const {
  const GroupElement y = projection.apply(x);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == 1) continue;
    out.push_back(factors[i] == 0 ? y[i] : floor_mod(y[i], factors[i]));
  }
  return out;
}

// -------------------------------------------------------------------- Subgroup

Subgroup::Subgroup(std::size_t rank, std::vector<GroupElement> generators)
    : rank_(rank), generators_(std::move(generators)), pivot_of_coord_(rank, -1) {
  for (const auto& g : generators_) require_rank(rank_, g.rank(), "subgroup generator");

  // Echelon basis with pivots processed from the last coordinate down.
  std::vector<GroupElement> pool;
  for (const auto& g : generators_)
    if (!g.is_zero()) pool.push_back(g);
  std::vector<std::pair<std::size_t, GroupElement>> found;  // (pivot coord, vector)
  for (std::size_t c = rank_; c-- > 0;) {
    std::optional<std::size_t> head;
    for (std::size_t r = 0; r < pool.size(); ++r) {
      if (pool[r][c] == 0) continue;
      if (!head) {
        head = r;
        continue;
      }
      GroupElement& a = pool[*head];
      GroupElement& b = pool[r];
      std::int64_t s = 0, t = 0;
      const std::int64_t g = egcd(a[c], b[c], s, t);
      const std::int64_t ag = a[c] / g, bg = b[c] / g;
      GroupElement na(rank_), nb(rank_);
      for (std::size_t k = 0; k < rank_; ++k) {
        na[k] = checked(static_cast<__int128>(s) * a[k] + static_cast<__int128>(t) * b[k]);
        nb[k] = checked(static_cast<__int128>(ag) * b[k] - static_cast<__int128>(bg) * a[k]);
      }
      a = std::move(na);
      b = std::move(nb);
    }
    if (!head) continue;
    GroupElement piv = pool[*head];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(*head));
    if (piv[c] < 0) piv = -piv;
    // Reduce earlier (higher-pivot) vectors at this coordinate.
    for (auto& [pc, v] : found) {
      const std::int64_t q = floor_div(v[c], piv[c]);
      if (q != 0) v -= q * piv;
    }
    found.emplace_back(c, std::move(piv));
    std::erase_if(pool, [](const GroupElement& g) { return g.is_zero(); });
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [c, v] : found) {
    pivot_of_coord_[c] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(v));
  }
  snf_ = smith_normal_form(IntMatrix::from_columns(rank_, generators_));
}

Subgroup Subgroup::whole(std::size_t rank) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(GroupElement::unit(rank, i));
  return Subgroup(rank, std::move(gens));
}

Subgroup Subgroup::trivial(std::size_t rank) { return Subgroup(rank, {}); }

Subgroup Subgroup::scaled(std::size_t rank, std::int64_t k) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(k * GroupElement::unit(rank, i));
  return Subgroup(rank, std::move(gens));
}

Subgroup Subgroup::diagonal(std::span<const std::int64_t> diag) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < diag.size(); ++i) gens.push_back(diag[i] * GroupElement::unit(diag.size(), i));
  return Subgroup(diag.size(), std::move(gens));
}

GroupElement Subgroup::reduce(const GroupElement& x) const {
  require_rank(rank_, x.rank(), "subgroup reduction");
  GroupElement r = x;
  for (std::size_t c = rank_; c-- > 0;) {
    const int p = pivot_of_coord_[c];
    if (p < 0) continue;
    const auto& b = basis_[static_cast<std::size_t>(p)];
    const std::int64_t q = floor_div(r[c], b[c]);
    if (q != 0) r -= q * b;
  }
  return r;
}

bool Subgroup::contains(const GroupElement& x) const { return reduce(x).is_zero(); }

bool Subgroup::contains(const Subgroup& other) const {
  if (other.rank_ != rank_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const GroupElement& g) { return contains(g); });
}

QuotientDescription Subgroup::quotient() const {
  QuotientDescription q;
  q.ambient_rank = rank_;
  q.projection = snf_.U;
  q.factors.assign(rank_, 0);
  for (std::size_t i = 0; i < snf_.diagonal.size(); ++i) q.factors[i] = snf_.diagonal[i];
  for (auto d : q.factors) {
    if (d == 0)
      ++q.free_rank;
    else if (d > 1)
      q.torsion.push_back(d);
  }
  return q;
}

std::vector<GroupElement> Subgroup::window(std::int64_t bound) const {
  std::vector<GroupElement> out;
  const std::size_t r = basis_.size();
  std::vector<std::int64_t> c(r, -bound);
  for (bool more = true; more;) {
    GroupElement p(rank_);
    for (std::size_t k = 0; k < r; ++k) p += c[k] * basis_[k];
    out.push_back(std::move(p));
    more = false;
    for (std::size_t k = r; k-- > 0;) {
      if (c[k] < bound) {
        ++c[k];
        more = true;
        break;
      }
      c[k] = -bound;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << ", ";
    os << basis_[i];
  }
  os << '>';
  return os.str();
}

// ---------------------------------------------------------------- free functions

QuotientDescription snf_quotient(std::size_t rank, const Subgroup& h) {
  require_rank(rank, h.rank(), "snf_quotient");
  return h.quotient();
}

std::vector<GroupElement> coset_reps(std::size_t rank, const Subgroup& h) {
  const QuotientDescription q = snf_quotient(rank, h);
  if (!q.finite()) {
    for (std::size_t i = 0; i < q.factors.size(); ++i)
      if (q.factors[i] == 0) {
        std::ostringstream os;
        os << "quotient Z^" << rank << " / " << h.to_string() << " is infinite: invariant factor d_"
           << (i + 1) << " = 0";
        throw InfiniteQuotientError(os.str());
      }
  }
  // Canonical residues fill the box prod [0, pivot_c).
  std::vector<std::int64_t> box(rank, 1);
  for (const auto& b : h.basis()) {
    std::size_t pivot = 0;
    for (std::size_t c = 0; c < rank; ++c)
      if (b[c] != 0) pivot = c;
    box[pivot] = b[pivot];
  }
  std::vector<GroupElement> out;
  GroupElement cur(rank);
  for (;;) {
    out.push_back(cur);
    std::size_t c = rank;
    bool done = true;
    while (c-- > 0) {
      if (cur[c] + 1 < box[c]) {
        ++cur[c];
        done = false;
        break;
      }
      cur[c] = 0;
    }
    if (done) break;
  }
  return out;
}

std::vector<GroupElement> window_points(std::size_t rank, std::int64_t bound) {
  return Subgroup::whole(rank).window(bound);
}

Subgroup solve_conditions(std::size_t rank, std::span<const LinearCondition> conditions) {
  if (conditions.empty()) return Subgroup::whole(rank);
  std::size_t slack = 0;
  for (const auto& c : conditions) {
    require_rank(rank, c.coeffs.size(), "linear condition");
    if (c.modulus != 0) ++slack;
  }
  IntMatrix a(conditions.size(), rank + slack);
  std::size_t s = 0;
  for (std::size_t r = 0; r < conditions.size(); ++r) {
    for (std::size_t j = 0; j < rank; ++j) a(r, j) = conditions[r].coeffs[j];
    if (conditions[r].modulus != 0) a(r, rank + s++) = -conditions[r].modulus;
  }
  const SmithForm f = smith_normal_form(a);
  std::vector<GroupElement> gens;
  for (std::size_t j = f.rank; j < a.cols(); ++j) {
    const GroupElement col = f.V.column(j);
    gens.emplace_back(std::vector<std::int64_t>(col.coords().begin(), col.coords().begin() + static_cast<std::ptrdiff_t>(rank)));
  }
  return Subgroup(rank, std::move(gens));
}

// --------------------------------------------------------------- CosetUnionSet

CosetUnionSet::CosetUnionSet(Subgroup base, std::vector<GroupElement> reps)
    : base_(std::move(base)), reps_(std::move(reps)) {
  if (reps_.empty()) throw ConstructionError("coset union needs at least the zero representative");
  for (const auto& r : reps_) require_rank(base_.rank(), r.rank(), "coset representative");
  if (!base_.contains(reps_.front()))
    throw ConstructionError("first coset representative must lie in the base subgroup (0 rep)");
  for (const auto& r : reps_) {
    GroupElement red = base_.reduce(r);
    if (std::find(reduced_.begin(), reduced_.end(), red) != reduced_.end())
      throw ConstructionError("coset representative " + r.to_string() + " is congruent to an earlier one");
    reduced_.push_back(std::move(red));
  }
}

std::optional<std::size_t> CosetUnionSet::rep_index(const GroupElement& x) const {
  const GroupElement red = base_.reduce(x);
  for (std::size_t i = 0; i < reduced_.size(); ++i)
    if (reduced_[i] == red) return i;
  return std::nullopt;
}

// ----------------------------------------------------------------------- PRS

namespace {
bool generates_all(std::size_t rank, std::vector<GroupElement> gens) {
  const Subgroup s(rank, std::move(gens));
  const auto q = s.quotient();
  return q.finite() && q.torsion.empty();
}
}  // namespace

PrsReport prs_check(const CosetUnionSet& s, std::size_t rank) {
  require_rank(rank, s.rank(), "prs_check");
  PrsReport r;
  r.contains_zero = s.contains(GroupElement::zero(rank));
  std::vector<GroupElement> gens = s.base().generators();
  gens.insert(gens.end(), s.reps().begin(), s.reps().end());
  r.generates_group = generates_all(rank, std::move(gens));
  r.closed_under_s_minus_2s = true;
  for (const auto& a : s.reps()) {
    for (const auto& b : s.reps()) {
      if (!s.contains(a - 2 * b)) {
        r.closed_under_s_minus_2s = false;
        r.closure_witness_s = a;
        r.closure_witness_t = b;
        return r;
      }
    }
  }
  return r;
}

PrsReport prs_check(std::span<const GroupElement> s, std::size_t rank, std::int64_t bound) {
  PrsReport r;
  r.window_verified = true;
  std::set<GroupElement> members;
  for (const auto& x : s) {
    require_rank(rank, x.rank(), "prs_check");
    members.insert(x);
  }
  r.contains_zero = members.count(GroupElement::zero(rank)) > 0;
  r.generates_group = generates_all(rank, {members.begin(), members.end()});
  r.closed_under_s_minus_2s = true;
  auto in_window = [&](const GroupElement& x) {
    return std::all_of(x.coords().begin(), x.coords().end(),
                       [&](std::int64_t c) { return c >= -bound && c <= bound; });
  };
  for (const auto& a : members)
    for (const auto& b : members) {
      const GroupElement d = a - 2 * b;
      if (in_window(d) && !members.count(d)) {
        r.closed_under_s_minus_2s = false;
        r.closure_witness_s = a;
        r.closure_witness_t = b;
        return r;
      }
    }
  return r;
}

// -------------------------------------------------------------- QuadraticMapF2

QuadraticMapF2 QuadraticMapF2::canonical(std::vector<int> basis_values,
                                         std::vector<std::vector<int>> pair_values) {
  QuadraticMapF2 q;
  q.rank_ = basis_values.size();
  for (auto& v : basis_values) v = static_cast<int>(floor_mod(v, 2));
  q.basis_ = std::move(basis_values);
  q.polar_.assign(q.rank_, std::vector<int>(q.rank_, 0));
  for (std::size_t i = 0; i < q.rank_; ++i)
    for (std::size_t j = i + 1; j < q.rank_; ++j) {
      int pv = 0;
      if (i < pair_values.size() && j < pair_values[i].size()) pv = pair_values[i][j];
      const int b = static_cast<int>(floor_mod(q.basis_[i] + q.basis_[j] + pv, 2));
      q.polar_[i][j] = q.polar_[j][i] = b;
    }
  return q;
}

QuadraticMapF2 QuadraticMapF2::zero(std::size_t rank) {
  return canonical(std::vector<int>(rank, 0), {});
}

QuadraticMapF2 QuadraticMapF2::from_function(std::size_t rank, Evaluator fn) {
  QuadraticMapF2 q;
  q.rank_ = rank;
  q.custom_ = std::move(fn);
  return q;
}

int QuadraticMapF2::operator()(const GroupElement& s) const {
  require_rank(rank_, s.rank(), "quadratic map");
  if (custom_) return static_cast<int>(floor_mod(custom_(s), 2));
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (basis_[i] && (s[i] & 1)) acc ^= 1;
    for (std::size_t j = i + 1; j < rank_; ++j)
      if (polar_[i][j] && (s[i] & 1) && (s[j] & 1)) acc ^= 1;
  }
  return static_cast<int>(acc);
}

int QuadraticMapF2::beta(const GroupElement& s, const GroupElement& t) const {
  return ((*this)(s) + (*this)(t) + (*this)(s + t)) & 1;
}

int QuadraticMapF2::pair_value(std::size_t i, std::size_t j) const {
  return (*this)(GroupElement::unit(rank_, i) + GroupElement::unit(rank_, j));
}

QuadraticMapReport quadratic_map_check(const QuadraticMapF2& q, std::int64_t bound,
                                       std::uint64_t sample_cap, std::uint64_t seed) {
  QuadraticMapReport r;
  const auto pts = window_points(q.rank(), bound);
  const std::uint64_t w = pts.size();
  auto test = [&](const GroupElement& s, const GroupElement& t, const GroupElement& d) {
    ++r.triples_checked;
    if (q.beta(s + t, d) != ((q.beta(s, d) + q.beta(t, d)) & 1)) {
      r.biadditive = false;
      r.witness_s = s;
      r.witness_t = t;
      r.witness_d = d;
      return false;
    }
    return true;
  };
  if (w * w * w <= sample_cap) {
    for (const auto& s : pts)
      for (const auto& t : pts)
        for (const auto& d : pts)
          if (!test(s, t, d)) return r;
    return r;
  }
  r.sampled = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (std::uint64_t k = 0; k < sample_cap; ++k)
    if (!test(pts[pick(rng)], pts[pick(rng)], pts[pick(rng)])) return r;
  return r;
}

}  // namespace toruslab
