// Copyright 2026 The vqa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types shared by every module.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace vqa {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad argument or malformed input (indices, ranges, file contents).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Matrix or vector shapes that do not fit together.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// A configured size cap (qubits, dense dimension, grid size) was exceeded.
class SizeLimitError : public Error {
  public:
    using Error::Error;
};

/// A computation produced a non-finite value.
class NumericalError : public Error {
  public:
    using Error::Error;
};

} // namespace vqa
