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

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace toruslab {

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

enum class FieldKind { rational, cyclotomic3, quadratic };

/// Q, Q(w) with w^2 + w + 1 = 0, or Q(s) with s^2 = d for a non-square d.
class FieldDescriptor {
 public:
  static FieldDescriptor rational() { return FieldDescriptor(FieldKind::rational, 0); }
  static FieldDescriptor cyclotomic3() { return FieldDescriptor(FieldKind::cyclotomic3, 0); }
  /// Throws ScalarError if d is zero or a square in Q.
  static FieldDescriptor quadratic(const Rational& d);

  FieldKind kind() const { return kind_; }
  bool is_extension() const { return kind_ != FieldKind::rational; }
  const Rational& d() const { return d_; }
  /// "Q", "Q(w)" or "Q(sqrt(d))".
  std::string name() const;
  /// Symbol used for the generator in textual scalars: "w" or "s".
  std::string_view generator_symbol() const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind_ == b.kind_ && a.d_ == b.d_;
  }

 private:
  FieldDescriptor(FieldKind k, const Rational& d) : kind_(k), d_(d) {}
  FieldKind kind_;
  Rational d_;
};

/// a + b * gen in one of the supported fields. Scalars of different fields
/// never combine implicitly; use embed() to move a rational into an extension.
class Scalar {
 public:
  Scalar() : field_(FieldDescriptor::rational()) {}
  explicit Scalar(const FieldDescriptor& field, Rational a = 0, Rational b = 0);

  static Scalar zero(const FieldDescriptor& f) { return Scalar(f); }
  static Scalar one(const FieldDescriptor& f) { return Scalar(f, 1); }
  static Scalar integer(const FieldDescriptor& f, long n) { return Scalar(f, n); }
  /// Primitive cube root of unity in Q(w).
  static Scalar omega() { return Scalar(FieldDescriptor::cyclotomic3(), 0, 1); }

  const FieldDescriptor& field() const { return field_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const { return Scalar(field_, -a_, -b_); }
  /// Multiplication by a rational keeps the field.
  Scalar scaled(const Rational& r) const { return Scalar(field_, a_ * r, b_ * r); }

  Scalar inverse() const;
  Scalar pow(long e) const;
  /// Nontrivial Galois automorphism; identity on Q.
  Scalar conjugate() const;
  /// x * conjugate(x), a rational.
  Rational norm() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Canonical text: "3/2", "w", "-1-w", "1/2+3*w", "2-s". Parsed back by parse_scalar.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void require_same(const Scalar& o) const;
  FieldDescriptor field_;
  Rational a_;
  Rational b_;
};

/// Rational scalar placed into field f.
Scalar embed(const Rational& r, const FieldDescriptor& f);
/// A rational-kind scalar moved into f (identity if already in f).
Scalar embed(const Scalar& x, const FieldDescriptor& f);

/// Parses sums of terms like "1", "-3/4", "w", "2*w", "w^2", "w^-1", "1+s".
/// "w" is only valid in Q(w) and "s" only in a quadratic field.
Scalar parse_scalar(std::string_view text, const FieldDescriptor& f);

/// Smallest k <= 6 with x^k = 1.
std::optional<int> is_root_of_unity(const Scalar& x);

/// x = (-1)^sign * w^omega_exp * prod p^e for x = +-w^a * r, r > 0 rational.
struct ScalarFactorization {
  int sign = 0;
  int omega_exp = 0;
  std::map<mpz_class, int> primes;

  Scalar reconstruct(const FieldDescriptor& f) const;
  friend bool operator==(const ScalarFactorization&, const ScalarFactorization&) = default;
};

/// Throws UnsupportedScalarError unless x has the form +-w^a * r.
ScalarFactorization factor_exponents(const Scalar& x);

}  // namespace toruslab
