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

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "toruslab/assoc.hpp"
#include "toruslab/lattice.hpp"
#include "toruslab/scalars.hpp"

namespace toruslab::testing {

/// Classes of [-w, w]^n modulo the span of gens, where membership is decided
/// by enumerating combinations with coefficients in [-c, c]. Does not touch
/// Smith forms or echelon bases.
inline std::vector<std::vector<GroupElement>> brute_force_classes(const std::vector<GroupElement>& gens,
                                                                  std::size_t n, std::int64_t w, std::int64_t c) {
  std::set<GroupElement> span;
  std::vector<std::int64_t> coef(gens.size(), -c);
  for (bool more = true; more;) {
    GroupElement p(n);
    for (std::size_t k = 0; k < gens.size(); ++k) p += coef[k] * gens[k];
    span.insert(p);
    more = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (coef[k] < c) {
        ++coef[k];
        more = true;
        break;
      }
      coef[k] = -c;
    }
  }
  if (gens.empty()) span.insert(GroupElement(n));
  std::vector<GroupElement> pts;
  std::vector<std::int64_t> x(n, -w);
  for (bool more = true; more;) {
    pts.emplace_back(x);
    more = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k] < w) {
        ++x[k];
        more = true;
        break;
      }
      x[k] = -w;
    }
  }
  std::vector<std::vector<GroupElement>> classes;
  for (const auto& p : pts) {
    bool placed = false;
    for (auto& cl : classes)
      if (span.count(p - cl.front())) {
        cl.push_back(p);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({p});
  }
  return classes;
}

/// Commutative group ring F[Z^n], used by the splitting oracle.
using RingElement = std::map<GroupElement, Scalar>;

inline void ring_add(RingElement& acc, const GroupElement& g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = acc.try_emplace(g, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

inline RingElement ring_mul(const RingElement& a, const RingElement& b) {
  RingElement out;
  for (const auto& [g, x] : a)
    for (const auto& [h, y] : b) ring_add(out, g + h, x * y);
  return out;
}

inline RingElement ring_sum(RingElement a, const RingElement& b, int sign = 1) {
  for (const auto& [g, x] : b) ring_add(a, g, sign > 0 ? x : -x);
  return a;
}

using RingMatrix = std::array<std::array<RingElement, 3>, 3>;

inline RingMatrix ring_matmul(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] = ring_sum(out[i][j], ring_mul(a[i][k], b[k][j]));
  return out;
}

/// 3x3 splitting of the standard degree-3 torus (sigma_1 = e1, sigma_2 = e2, w in F):
/// u1 -> diag(s, w^2 s, w s) with s^3 = u1^3, u2 -> [[0,0,c],[1,0,0],[0,1,0]]
/// with c = u2^3. Entries live in F[Z^4] with s placed at degree e1. This gives
/// u2 u1 = w u1 u2 and reproduces the twisted products of x^{i e1 + j e2 + gamma}.
class SplittingOracle {
 public:
  explicit SplittingOracle(std::size_t n) : n_(n) {
    const FieldDescriptor f = FieldDescriptor::cyclotomic3();
    const Scalar one = Scalar::one(f), w = Scalar::omega();
    const GroupElement s = GroupElement::unit(n, 0);
    d_[0][0] = {{s, one}};
    d_[1][1] = {{s, w * w}};
    d_[2][2] = {{s, w}};
    p_[0][2] = {{3 * GroupElement::unit(n, 1), one}};
    p_[1][0] = {{GroupElement(n), one}};
    p_[2][1] = {{GroupElement(n), one}};
  }

  RingMatrix image(const AssocElement& x) const {
    RingMatrix out;
    const Scalar one = Scalar::one(FieldDescriptor::cyclotomic3());
    for (const auto& [deg, c] : x.terms()) {
      const std::int64_t i = floor_mod(deg[0], 3), j = floor_mod(deg[1], 3);
      GroupElement gamma = deg;
      gamma[0] -= i;
      gamma[1] -= j;
      RingMatrix m = identity();
      for (std::int64_t k = 0; k < i; ++k) m = ring_matmul(m, d_);
      for (std::int64_t k = 0; k < j; ++k) m = ring_matmul(m, p_);
      for (auto& row : m)
        for (auto& e : row) e = ring_mul(e, RingElement{{gamma, c}});
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) out[a][b] = ring_sum(out[a][b], m[a][b]);
    }
    return out;
  }

  static RingElement det(const RingMatrix& m) {
    auto term = [&](int a, int b, int c) { return ring_mul(ring_mul(m[0][a], m[1][b]), m[2][c]); };
    RingElement out = ring_sum(ring_sum(term(0, 1, 2), term(1, 2, 0)), term(2, 0, 1));
    out = ring_sum(out, term(2, 1, 0), -1);
    out = ring_sum(out, term(0, 2, 1), -1);
    out = ring_sum(out, term(1, 0, 2), -1);
    return out;
  }

  RingMatrix identity() const {
    RingMatrix m;
    for (int i = 0; i < 3; ++i) m[i][i] = {{GroupElement(n_), Scalar::one(FieldDescriptor::cyclotomic3())}};
    return m;
  }

  const RingMatrix& u1() const { return d_; }
  const RingMatrix& u2() const { return p_; }

 private:
  std::size_t n_;
  RingMatrix d_, p_;
};

inline RingElement to_ring(const AssocElement& central) { return RingElement(central.terms().begin(), central.terms().end()); }

}  // namespace toruslab::testing
