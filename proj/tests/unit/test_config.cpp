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

#include <string>

#include "catch_amalgamated.hpp"
#include "xyphase/config.hpp"
#include "xyphase/errors.hpp"

using namespace xyphase;

namespace {

const std::string kConfig = R"({
  "L": 2,
  "gamma": 1.5,
  "n_steps": 20,
  "Bx_list": [0.02, 0.03, 0.04, 0.05],
  "Bz_initial": 1.0,
  "Bz_final": 0.0,
  "seed": 7,
  "fit_model": "quartic-even"
}
)";

std::string with(const std::string& from, const std::string& to) {
  std::string text = kConfig;
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

int error_line(const std::string& text) {
  try {
    parse_sweep_config(text, "test.json");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).rfind("test.json:", 0) == 0);
    return e.line();
  }
  FAIL("config was accepted");
  return -1;
}

}  // namespace

TEST_CASE("Minimal config parses with defaults") {
  const auto c = parse_sweep_config(kConfig);
  CHECK(c.sites == 2);
  CHECK(c.coupling == 1.0);
  CHECK(c.periodic);
  CHECK(c.bx_list.size() == 4);
  CHECK(c.initial_state == InitialState::AllUp);
  CHECK(c.backend == Backend::ExactExponential);
  CHECK(c.shots == 0);
  CHECK(!c.noise);
  CHECK(c.seed == 7);
  CHECK(c.fit_model == FitModel::QuarticEven);
  CHECK(c.initial_magnetization() == 1.0);
  CHECK(c.resolved_target_m() == 0.5);
}

TEST_CASE("Errors point at the offending line") {
  CHECK(error_line(with("\"Bz_final\": 0.0", "\"Bz_final\": 1.0")) == 6);
  CHECK(error_line(with("\"n_steps\": 20", "\"n_steps\": 0")) == 4);
  CHECK(error_line(with("[0.02, 0.03", "[-0.02, 0.03")) == 5);
  CHECK(error_line(with("\"seed\": 7", "\"seed\": 7,\n  \"colour\": 1")) == 9);
  CHECK(error_line(with("\"gamma\": 1.5", "\"gamma\": \"fast\"")) == 3);
  CHECK(error_line(with("\"quartic-even\"", "\"cubic\"")) == 9);
  CHECK(error_line(with("\"L\": 2,", "\"L\": 2")) == 3);
  CHECK(error_line(with("\"L\": 2", "\"L\": 40")) == 2);
}

TEST_CASE("Missing keys are reported") {
  try {
    parse_sweep_config(with("  \"seed\": 7,\n", ""), "x");
    FAIL("accepted");
  } catch (const ConfigError& e) {
    CHECK(e.message().find("seed") != std::string::npos);
  }
}

TEST_CASE("Noise needs the gate-level backend") {
  const auto noisy = with("\"seed\": 7", "\"seed\": 7,\n  \"noise\": {\"p\": 0.001}");
  CHECK_THROWS_AS(parse_sweep_config(noisy), ConfigError);
  const auto c = parse_sweep_config(
      with("\"seed\": 7", "\"seed\": 7,\n  \"backend\": \"gate-level\",\n"
                          "  \"noise\": {\"p\": 0.001, \"trajectories\": 50}"));
  REQUIRE(c.noise);
  CHECK(c.noise->probability == 0.001);
  CHECK(c.noise->trajectories == 50);
  CHECK(c.noise->seed != 0);
  // derived, so stable
  CHECK(parse_sweep_config(sweep_config_to_json(c)).noise->seed == c.noise->seed);
}

TEST_CASE("Down sector defaults") {
  auto c = parse_sweep_config(with("\"Bz_initial\": 1.0", "\"Bz_initial\": -1.0"));
  c.initial_state = InitialState::AllDown;
  CHECK(c.initial_magnetization() == -1.0);
  CHECK(c.resolved_target_m() == -0.5);
}

TEST_CASE("Config round trip") {
  auto c = parse_sweep_config(kConfig);
  c.target_m = 0.5;
  c.crossing_window = CrossingWindow{0.2, 0.8};
  c.scale_endpoints = true;
  c.output_dir = "elsewhere";
  const std::string text = sweep_config_to_json(c);
  const auto back = parse_sweep_config(text);
  CHECK(sweep_config_to_json(back) == text);
  CHECK(back.crossing_window->hi == 0.8);
  CHECK(back.output_dir == "elsewhere");
}

TEST_CASE("Malformed JSON") {
  CHECK(error_line("{\n  \"L\": 2,\n  oops\n}") == 3);
}
