// Copyright 2026 The mmbox Authors
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

namespace mmbox {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector/matrix lengths that do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The instance is too large for the requested mode.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition on the inputs does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but not supported.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmbox
