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

#include <cstdint>
#include <string>
#include <vector>

namespace xyphase {

struct TraceEntry {
  int step = 0;
  double t = 0.0;
  double bz = 0.0;
  double m = 0.0;
};

struct TraceMetadata {
  int sites = 0;
  double bx = 0.0;
  double gamma = 0.0;
  int n_steps = 0;
  std::string backend;
  int shots = 0;  // 0 means exact expectation values
  std::uint64_t seed = 0;
};

/// Magnetization <S^z_total> recorded along a field sweep, in step order.
struct MagnetizationTrace {
  TraceMetadata meta;
  std::vector<TraceEntry> entries;

  std::vector<double> fields() const;
  std::vector<double> magnetizations() const;
};

/// CSV with header "step,t,Bz,m,shots,seed".
std::string trace_to_csv(const MagnetizationTrace& trace);

/// Parses the format written by trace_to_csv. Metadata other than shots and
/// seed is left default. Throws ValidationError on malformed input.
MagnetizationTrace trace_from_csv(const std::string& text);

}  // namespace xyphase
