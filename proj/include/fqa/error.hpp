// Copyright 2026 The fqa Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fqa {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands or parameters violate a documented precondition.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Operands act on registers of different sizes.
class RegisterMismatch : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

/// Requested problem exceeds a dense/brute-force size cap.
class SizeError : public Error {
  public:
    using Error::Error;
};

/// Malformed input text. `line()` is 1-based.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// The rescaling derivative fell to or below the guard threshold, so the
/// feedback gain 1/fdot is undefined.
class VanishingDerivativeError : public Error {
  public:
    VanishingDerivativeError(double tau, double fdot, double epsilon);

    [[nodiscard]] double tau() const noexcept { return tau_; }
    [[nodiscard]] double fdot() const noexcept { return fdot_; }

  private:
    double tau_;
    double fdot_;
};

/// A quantity that must be finite (or real) was not.
class NumericalError : public Error {
  public:
    using Error::Error;
};

} // namespace fqa
