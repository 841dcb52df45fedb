// Copyright 2026 The permdyn Authors.
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

#ifndef PERMDYN_ERRORS_HPP
#define PERMDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permdyn {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that does not follow the polynomial / expression / JSON formats.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Mathematical precondition violated (reducible modulus, non-permutation, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive operation refused because q^k (or an intermediate size) is too large.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same quantity disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw ConsistencyError(what);
}

}  // namespace detail
}  // namespace permdyn

#endif  // PERMDYN_ERRORS_HPP
