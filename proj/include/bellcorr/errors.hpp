// Copyright 2026 The bellcorr Authors
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

namespace bellcorr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on site count or vector length.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A value is outside the admissible domain (ids, site counts, angles...).
class RangeError : public Error {
  public:
    using Error::Error;
};

/// A coefficient table whose Fourier transform is not a pure sign table.
class NotExtremalError : public Error {
  public:
    using Error::Error;
};

/// Malformed text or file input.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Numerical machinery failed (as opposed to a mathematical "no").
class SolverError : public Error {
  public:
    using Error::Error;
};

} // namespace bellcorr
