/* Copyright 2026 The trico Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TRICO_ERROR_HPP
#define TRICO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trico {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

class NotAUnit : public Error {
 public:
  NotAUnit() : Error("element is not a unit") {}
};

/// Two binomials of different degree were compared; equivalence between
/// distinct B_k is impossible, so this is reported as a caller error.
class CrossDegreeRefusal : public Error {
 public:
  CrossDegreeRefusal(int k1, int k2)
      : Error("binomials have different degrees (" + std::to_string(k1) + " vs " +
              std::to_string(k2) + "); equivalence across degrees is impossible") {}
};

/// An enumeration would exceed its configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position()` is the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace trico

#endif  // TRICO_ERROR_HPP
