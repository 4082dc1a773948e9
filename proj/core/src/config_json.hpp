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

#include <string>

#include <nlohmann/json.hpp>

#include "xyphase/config.hpp"

namespace xyphase::detail {

using Json = nlohmann::ordered_json;

Json config_to_json(const SweepConfig& config);

/// `text` is the document `value` came from; it is only used to anchor
/// diagnostics to lines.
SweepConfig config_from_json(const Json& value, const std::string& text,
                             const std::string& source);

/// 1-based line of the first `"key"` at or after byte `from`, 0 if absent.
int line_of_key(const std::string& text, const std::string& key,
                std::size_t from = 0);

}  // namespace xyphase::detail
