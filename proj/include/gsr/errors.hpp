// Copyright 2026 The gsrdist Project Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gsr {

/// Argument hit a pole of the function (e.g. Gamma at a nonpositive integer).
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No evaluation regime reached the target tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Second Kummer parameter too close to an integer for the connection formula.
class DegenerateIndexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation requested in the wrong pre/post-change regime.
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root scan ceiling reached before the requested number of sign changes.
class BracketExhaustionError : public std::runtime_error {
 public:
  BracketExhaustionError(const std::string& msg, int found)
      : std::runtime_error(msg), n_found(found) {}
  int n_found;
};

/// Mode-weight denominator degenerate (|dW/db| below representable scale).
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simulated state exceeded the blow-up guard (diagnostic for a bad dt).
class NumericalBlowupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two curves do not share a time grid.
class GridMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsr
