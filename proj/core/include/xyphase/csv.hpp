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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace xyphase {

/// 12 significant digits, '.' decimal separator, no locale dependence.
/// Negative zero prints as "0".
std::string format_number(double value);

/// Joins formatted cells with ',' and terminates the row with '\n'.
std::string csv_row(const std::vector<double>& values);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

std::string read_file(const std::filesystem::path& path);

/// Splits CSV text into rows of cells; blank lines are skipped.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace xyphase
