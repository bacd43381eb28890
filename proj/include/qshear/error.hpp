// Copyright 2026 The qshear Authors
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

namespace qshear {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A gate or state refers to wires that the netlist does not have.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A builder or evaluator was given an out-of-domain parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Register contents at circuit entry violate the circuit contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed image input (PGM syntax, non-square, non power-of-two side).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Pixel value outside [0, 255].
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A pixel term was handed to the half-shear that does not own it.
class RoutingError : public Error {
 public:
  using Error::Error;
};

/// Rotation angle outside the supported (-90, 90) degree range.
class UnsupportedAngleError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qshear
