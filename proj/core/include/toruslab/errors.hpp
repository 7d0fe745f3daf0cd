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

#include <stdexcept>
#include <string>

namespace toruslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank mismatch between group elements, subgroups or cocycles.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A quotient that was required to be finite has a free summand.
class InfiniteQuotientError : public Error {
 public:
  using Error::Error;
};

/// Scalars from different fields were combined, or a scalar is outside the
/// supported form (e.g. factor_exponents on an irrational non-unit).
class ScalarError : public Error {
 public:
  using Error::Error;
};

class UnsupportedScalarError : public ScalarError {
 public:
  using ScalarError::ScalarError;
};

class DivisionByZeroError : public ScalarError {
 public:
  using ScalarError::ScalarError;
};

/// Elements from different algebras were combined.
class HandleMismatchError : public Error {
 public:
  using Error::Error;
};

/// Inversion was requested for an element that has no certified inverse
/// representation (non-homogeneous input).
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// Inversion of the zero element.
class ZeroElementError : public Error {
 public:
  using Error::Error;
};

/// A construction precondition failed. The message names the witness.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A group element could not be written in the required coset form.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// An operand lies outside the carrier of a Jordan view (e.g. a non-fixed
/// element passed to a Hermitian view).
class NotInCarrierError : public Error {
 public:
  using Error::Error;
};

/// Integer overflow in lattice arithmetic.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace toruslab
