// Copyright 2026 The xyphase Authors
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

namespace xyphase {

/// Input violates a documented precondition or invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request failed during computation.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hilbert space would exceed the configured site cap.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The local-ramp integral diverges because the gap closes.
class DivergingIntegralError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// A trace never passes through the requested magnetization.
class NoCrossingError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace xyphase
