// Copyright 2026 The Sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEPSCOPE_ERRORS_HPP
#define SEPSCOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sepscope {

/// Input violates a structural invariant (non-Hermitian matrix, bad trace,
/// shape mismatch, out-of-range parameter, malformed file, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Shape/dimension bookkeeping failure.
class ShapeError : public ValidationError {
 public:
  explicit ShapeError(const std::string& what) : ValidationError(what) {}
};

/// A scalar function was evaluated outside its domain (e.g. log of a
/// retained negative eigenvalue).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An operator that must be full-rank (or have a usable support) is not.
class RankError : public std::runtime_error {
 public:
  explicit RankError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerically inconsistent input: the range inclusion required for the
/// conditional amplitude operator fails, signalling a non-state input.
class InconsistencyError : public std::runtime_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sepscope

#endif  // SEPSCOPE_ERRORS_HPP
