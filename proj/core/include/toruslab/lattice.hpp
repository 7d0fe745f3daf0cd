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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace toruslab {

/// An element of Z^n. All runtime groups are free abelian of explicit rank.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::size_t rank) : coords_(rank, 0) {}
  explicit GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  GroupElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static GroupElement zero(std::size_t rank) { return GroupElement(rank); }
  static GroupElement unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const;

  GroupElement& operator+=(const GroupElement& other);
  GroupElement& operator-=(const GroupElement& other);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  GroupElement operator-() const;
  friend GroupElement operator*(std::int64_t k, const GroupElement& a);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.coords_ <=> b.coords_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
    return os << g.to_string();
  }

 private:
  std::vector<std::int64_t> coords_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(std::size_t rows, std::span<const GroupElement> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  GroupElement apply(const GroupElement& x) const;
  GroupElement column(std::size_t c) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Smith normal form U * M * V = D with U, V unimodular.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Diagonal of D (length min(rows, cols)), d_1 | d_2 | ..., zeros last.
  std::vector<std::int64_t> diagonal;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Structure of Z^n / H.
struct QuotientDescription {
  std::size_t ambient_rank = 0;
  /// Invariant factors d_i > 1, in divisibility order.
  std::vector<std::int64_t> torsion;
  /// Number of free Z summands.
  std::size_t free_rank = 0;
  /// All n invariant factors of the quotient including 1s; 0 marks a free summand.
  std::vector<std::int64_t> factors;
  /// Rows of U: x maps to (U x)_i mod factors[i] (or (U x)_i for a free summand).
  IntMatrix projection;

  bool finite() const { return free_rank == 0; }
  /// Group order when finite.
  std::optional<std::uint64_t> order() const;
  /// Image of x in the product of cyclic groups, reduced to [0, d_i).
  std::vector<std::int64_t> project(const GroupElement& x) const;
};

/// A subgroup of Z^n given by generators. Immutable once built.
///
/// Canonical residues use an echelon basis whose i-th vector has its pivot at
/// coordinate i and zeros above it; reduction runs from the last coordinate
/// down, leaving 0 <= x_i < pivot_i at every pivot coordinate.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t rank, std::vector<GroupElement> generators);

  static Subgroup whole(std::size_t rank);
  static Subgroup trivial(std::size_t rank);
  /// k Z^n.
  static Subgroup scaled(std::size_t rank, std::int64_t k);
  static Subgroup diagonal(std::span<const std::int64_t> diag);

  std::size_t rank() const { return rank_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Echelon basis (one vector per pivot coordinate, ascending pivots).
  const std::vector<GroupElement>& basis() const { return basis_; }
  const SmithForm& snf() const { return snf_; }
  std::size_t lattice_rank() const { return basis_.size(); }
  bool full_rank() const { return basis_.size() == rank_; }

  bool contains(const GroupElement& x) const;
  bool contains(const Subgroup& other) const;
  bool congruent(const GroupElement& a, const GroupElement& b) const { return contains(a - b); }
  /// Canonical representative of x + H.
  GroupElement reduce(const GroupElement& x) const;
  QuotientDescription quotient() const;
  std::optional<std::uint64_t> index() const { return quotient().order(); }

  /// Points sum c_k b_k over the echelon basis with |c_k| <= bound, sorted.
  std::vector<GroupElement> window(std::int64_t bound) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.rank_ == b.rank_ && a.basis_ == b.basis_;
  }
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> basis_;
  std::vector<int> pivot_of_coord_;  // index into basis_, or -1
  SmithForm snf_;
};

/// Invariant factors of Z^rank / H. Throws DimensionError on rank mismatch.
QuotientDescription snf_quotient(std::size_t rank, const Subgroup& h);

/// Canonical coset representatives of Z^rank / H, sorted lexicographically.
/// Throws InfiniteQuotientError when the quotient has a free summand.
std::vector<GroupElement> coset_reps(std::size_t rank, const Subgroup& h);

/// All points of [-bound, bound]^rank in lexicographic order.
std::vector<GroupElement> window_points(std::size_t rank, std::int64_t bound);

/// A linear condition on x in Z^n: sum coeffs_i x_i == 0 (mod modulus), with
/// modulus 0 meaning an equation over Z.
struct LinearCondition {
  std::vector<std::int64_t> coeffs;
  std::int64_t modulus = 0;
};

/// The lattice {x in Z^rank : every condition holds}.
Subgroup solve_conditions(std::size_t rank, std::span<const LinearCondition> conditions);

/// S = union over reps of (rep + base). The first rep is 0.
class CosetUnionSet {
 public:
  CosetUnionSet(Subgroup base, std::vector<GroupElement> reps);

  const Subgroup& base() const { return base_; }
  const std::vector<GroupElement>& reps() const { return reps_; }
  std::size_t rank() const { return base_.rank(); }
  bool contains(const GroupElement& x) const { return rep_index(x).has_value(); }
  /// Index of the rep congruent to x, if x is in S.
  std::optional<std::size_t> rep_index(const GroupElement& x) const;

 private:
  Subgroup base_;
  std::vector<GroupElement> reps_;
  std::vector<GroupElement> reduced_;
};

struct PrsReport {
  bool generates_group = false;
  bool contains_zero = false;
  bool closed_under_s_minus_2s = false;
  /// True when S was a finite set and the checks only hold inside its window.
  bool window_verified = false;
  std::optional<GroupElement> closure_witness_s;
  std::optional<GroupElement> closure_witness_t;
  bool ok() const { return generates_group && contains_zero && closed_under_s_minus_2s; }
};

/// Closed-form check of the pointed reflection subspace axioms for a coset
/// union: <S> = Z^n, 0 in S, S - 2S in S. The last one reduces to
/// rep_i - 2 rep_j lying in S for every pair of reps.
PrsReport prs_check(const CosetUnionSet& s, std::size_t rank);

/// Windowed check for a finite set S inside [-bound, bound]^rank. The
/// closure axiom is only tested where s - 2t stays inside the window.
PrsReport prs_check(std::span<const GroupElement> s, std::size_t rank, std::int64_t bound);

/// A map q: Z^n -> F_2 whose polar form beta_q(s,t) = q(s) + q(t) - q(s+t)
/// should be biadditive.
///
/// The canonical form stores q(e_i) and q(e_i + e_j); it determines q on Z^n
/// under the assumption beta_q(e_i, e_i) = 0 (forced whenever q induces an
/// involution), via q(s) = sum a_i s_i + sum_{i<j} b_ij s_i s_j mod 2.
class QuadraticMapF2 {
 public:
  using Evaluator = std::function<int(const GroupElement&)>;

  QuadraticMapF2() = default;
  /// basis_values[i] = q(e_i); pair_values[i][j] = q(e_i + e_j) for i < j.
  static QuadraticMapF2 canonical(std::vector<int> basis_values,
                                  std::vector<std::vector<int>> pair_values);
  static QuadraticMapF2 zero(std::size_t rank);
  /// Arbitrary evaluator; callers should run quadratic_map_check before use.
  static QuadraticMapF2 from_function(std::size_t rank, Evaluator fn);

  std::size_t rank() const { return rank_; }
  bool is_canonical() const { return !custom_; }
  int operator()(const GroupElement& s) const;
  int beta(const GroupElement& s, const GroupElement& t) const;
  const std::vector<int>& basis_values() const { return basis_; }
  /// q(e_i + e_j), evaluated through the map.
  int pair_value(std::size_t i, std::size_t j) const;

 private:
  std::size_t rank_ = 0;
  std::vector<int> basis_;
  std::vector<std::vector<int>> polar_;  // b_ij
  Evaluator custom_;
};

struct QuadraticMapReport {
  bool biadditive = true;
  std::uint64_t triples_checked = 0;
  bool sampled = false;
  std::optional<GroupElement> witness_s, witness_t, witness_d;
};

/// Checks beta_q(s+t, d) = beta_q(s, d) + beta_q(t, d) for s, t, d in
/// [-bound, bound]^n; above sample_cap triples a seeded random sample is used.
QuadraticMapReport quadratic_map_check(const QuadraticMapF2& q, std::int64_t bound,
                                       std::uint64_t sample_cap = 2'000'000,
                                       std::uint64_t seed = 0x5eed);

/// floor(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// a mod b in [0, b) for b > 0.
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

}  // namespace toruslab
