// Copyright 2026 The quasialg Authors
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

namespace quasialg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad group orders, mismatched dimensions, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its mathematical domain
/// (e.g. a (Z_2)^n-only check on a group with an element of order 3).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A requested construction or search exceeds the configured size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace quasialg
