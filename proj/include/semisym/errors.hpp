// Copyright 2026 The semisym Authors
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

namespace semisym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector or index does not match the dimension of the object it is used
/// with.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration was requested above its configured guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A serialized input could not be parsed or violates its schema.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A caller-side contract was broken (e.g. a non-diagonal gate in a
/// cost-only evaluation).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace semisym
