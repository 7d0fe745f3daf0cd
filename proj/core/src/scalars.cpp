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

#include "toruslab/scalars.hpp"

#include <cctype>
#include <sstream>

#include "toruslab/errors.hpp"

namespace toruslab {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    Rational r(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
    if (r.get_den() == 0) throw DivisionByZeroError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ScalarError("malformed rational '" + s + "'");
  }
}

std::string to_string(const Rational& r) { return r.get_str(10); }

// -------------------------------------------------------------- FieldDescriptor

namespace {
bool is_square(const mpz_class& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }
}  // namespace

FieldDescriptor FieldDescriptor::quadratic(const Rational& d) {
  if (sgn(d) == 0) throw ScalarError("quadratic extension needs d != 0");
  if (is_square(d.get_num()) && is_square(d.get_den()))
    throw ScalarError("d = " + to_string(d) + " is a square in Q; Q(sqrt(d)) is not an extension");
  return FieldDescriptor(FieldKind::quadratic, d);
}

std::string FieldDescriptor::name() const {
  switch (kind_) {
    case FieldKind::rational:
      return "Q";
    case FieldKind::cyclotomic3:
      return "Q(w)";
    case FieldKind::quadratic:
      return "Q(sqrt(" + to_string(d_) + "))";
  }
  return "?";
}

std::string_view FieldDescriptor::generator_symbol() const {
  switch (kind_) {
    case FieldKind::cyclotomic3:
      return "w";
    case FieldKind::quadratic:
      return "s";
    default:
      return "";
  }
}

// ----------------------------------------------------------------------- Scalar

Scalar::Scalar(const FieldDescriptor& field, Rational a, Rational b)
    : field_(field), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (!field_.is_extension() && sgn(b_) != 0)
    throw ScalarError("rational field scalar with nonzero generator part");
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw ScalarError("scalars from " + field_.name() + " and " + o.field_.name() + " do not mix");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  switch (field_.kind()) {
    case FieldKind::rational:
      a_ *= o.a_;
      break;
    case FieldKind::cyclotomic3: {
      // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd) w, using w^2 = -1 - w
      Rational bd = b_ * o.b_;
      Rational na = a_ * o.a_ - bd;
      Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
      a_ = std::move(na);
      b_ = std::move(nb);
      break;
    }
    case FieldKind::quadratic: {
      Rational na = a_ * o.a_ + b_ * o.b_ * field_.d();
      Rational nb = a_ * o.b_ + b_ * o.a_;
      a_ = std::move(na);
      b_ = std::move(nb);
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::conjugate() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return *this;
    case FieldKind::cyclotomic3:
      // a + b w^2 = (a - b) - b w
      return Scalar(field_, a_ - b_, -b_);
    case FieldKind::quadratic:
      return Scalar(field_, a_, -b_);
  }
  return *this;
}

Rational Scalar::norm() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return a_ * a_;
    case FieldKind::cyclotomic3:
      return a_ * a_ - a_ * b_ + b_ * b_;
    case FieldKind::quadratic:
      return a_ * a_ - b_ * b_ * field_.d();
  }
  return 0;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero scalar");
  if (!field_.is_extension()) return Scalar(field_, 1 / a_);
  const Rational n = norm();
  Scalar c = conjugate();
  return Scalar(field_, c.a_ / n, c.b_ / n);
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar acc = one(field_);
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

std::string Scalar::to_string() const {
  const auto gen = std::string(field_.generator_symbol());
  if (sgn(b_) == 0) return toruslab::to_string(a_);
  std::string gpart;
  if (b_ == 1)
    gpart = gen;
  else if (b_ == -1)
    gpart = "-" + gen;
  else
    gpart = toruslab::to_string(b_) + "*" + gen;
  if (sgn(a_) == 0) return gpart;
  std::string out = toruslab::to_string(a_);
  if (gpart.front() != '-') out += '+';
  return out + gpart;
}

Scalar embed(const Rational& r, const FieldDescriptor& f) { return Scalar(f, r); }

Scalar embed(const Scalar& x, const FieldDescriptor& f) {
  if (x.field() == f) return x;
  if (x.field().is_extension()) throw ScalarError("cannot embed " + x.field().name() + " into " + f.name());
  return Scalar(f, x.a());
}

// ---------------------------------------------------------------------- parsing

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const FieldDescriptor& f) : text_(text), field_(f) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ScalarError("cannot parse scalar '" + std::string(text_) + "' in " + field_.name() + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Scalar expr() {
    const bool neg = eat('-');
    if (!neg) eat('+');
    Scalar acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Scalar term() {
    Scalar acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Scalar factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    Scalar base;
    const char c = text_[pos_];
    if (eat('(')) {
      base = expr();
      if (!eat(')')) fail("missing ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (eat('/')) num += "/" + digits();
      base = embed(parse_rational(num), field_);
    } else if (c == 'w' || c == 's') {
      ++pos_;
      if (std::string_view(&c, 1) != field_.generator_symbol())
        fail(std::string("generator '") + c + "' does not belong to this field");
      base = Scalar(field_, 0, 1);
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    if (eat('^')) {
      bool neg = eat('-');
      long e = std::stol(digits());
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  std::string_view text_;
  const FieldDescriptor& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const FieldDescriptor& f) { return ScalarParser(text, f).parse(); }

// ------------------------------------------------------------ roots and factors

std::optional<int> is_root_of_unity(const Scalar& x) {
  Scalar p = x;
  for (int k = 1; k <= 6; ++k) {
    if (p.is_one()) return k;
    p *= x;
  }
  return std::nullopt;
}

namespace {

void factor_into(mpz_class n, int sign, std::map<mpz_class, int>& out) {
  for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      out[p] += sign;
      n /= p;
    }
  }
  if (n > 1) out[n] += sign;
}

}  // namespace

ScalarFactorization factor_exponents(const Scalar& x) {
  if (x.is_zero()) throw UnsupportedScalarError("zero has no exponent factorization");
  ScalarFactorization f;
  Rational r;
  if (x.is_rational()) {
    r = x.a();
  } else if (x.field().kind() == FieldKind::cyclotomic3) {
    if (sgn(x.a()) == 0) {
      f.omega_exp = 1;  // b w
      r = x.b();
    } else if (x.a() == x.b()) {
      f.omega_exp = 2;  // c w^2 = -c - c w
      r = -x.a();
    } else {
      throw UnsupportedScalarError("scalar " + x.to_string() + " is not of the form +-w^a * r");
    }
  } else {
    throw UnsupportedScalarError("scalar " + x.to_string() + " has an irrational non-unit part");
  }
  if (sgn(r) < 0) {
    f.sign = 1;
    r = -r;
  }
  factor_into(r.get_num(), 1, f.primes);
  factor_into(r.get_den(), -1, f.primes);
  return f;
}

Scalar ScalarFactorization::reconstruct(const FieldDescriptor& fd) const {
  Rational r = 1;
  for (const auto& [p, e] : primes) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e < 0)
      r /= Rational(pe);
    else
      r *= Rational(pe);
  }
  if (sign) r = -r;
  Scalar out = embed(r, fd);
  if (omega_exp % 3 != 0) {
    if (fd.kind() != FieldKind::cyclotomic3) throw ScalarError("w is not in " + fd.name());
    out *= Scalar::omega().pow(omega_exp);
  }
  return out;
}

}  // namespace toruslab
