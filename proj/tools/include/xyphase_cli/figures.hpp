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

// Baked-in run parameters for the figure datasets.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "xyphase/config.hpp"

namespace xyphase::figures {

/// Bx values of the two- and three-site sweeps.
const std::vector<double>& standard_bx_list();

/// Ten sites, gamma = 50, 1000 steps, Bx = 0.05, all-up from Bz = 1.5.
SweepConfig ten_site();

/// Two sites, gamma = 1.5, all-up 1 -> 0 or all-down -1 -> 0.
SweepConfig two_site(bool all_up, int n_steps = 20);

/// Three sites, gamma = 2, all-up 2 -> 0.
SweepConfig three_site(int n_steps = 50);

/// Gate-level copy of `base` with trajectory noise and endpoint scaling,
/// analysed with the linear model.
SweepConfig noisy(const SweepConfig& base, double probability,
                  int trajectories);

std::vector<std::string> names();

/// Writes the named dataset into `dir`. Throws ValidationError for an
/// unknown name. Progress lines go to `log`.
void write_figure(const std::string& name, const std::filesystem::path& dir,
                  int jobs, std::ostream& log);

}  // namespace xyphase::figures
