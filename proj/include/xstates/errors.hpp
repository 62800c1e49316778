// Copyright 2026 The xstates authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace xstates {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed operator / state / channel text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, char offending)
      : Error(what), offending_(offending) {}
  char offending() const { return offending_; }

 private:
  char offending_;
};

/// Input violated a Hermiticity precondition.
class NotHermitianError : public Error {
 public:
  NotHermitianError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// Matrix has an eigenvalue below the PSD clamp window.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// Density matrix does not satisfy the X-pattern of the requested subalgebra.
class PatternError : public Error {
 public:
  PatternError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// State failed validation (trace, PSD, closed-form radicand, ...).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Kraus set does not resolve the identity.
class IncompleteChannelError : public Error {
 public:
  IncompleteChannelError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace xstates
