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

#include "xyphase/config.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "config_json.hpp"
#include "xyphase/csv.hpp"

namespace xyphase {

namespace {

std::string anchored(const std::string& source, int line,
                     const std::string& message) {
  std::string out = source;
  if (line > 0) out += ":" + std::to_string(line);
  return out + ": error: " + message;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line,
                         const std::string& message)
    : ValidationError(anchored(source, line, message)),
      source_(source),
      line_(line),
      message_(message) {}

const char* to_string(InitialState s) {
  return s == InitialState::AllUp ? "all-up" : "all-down";
}

InitialState initial_state_from_string(const std::string& name) {
  if (name == "all-up") return InitialState::AllUp;
  if (name == "all-down") return InitialState::AllDown;
  throw ValidationError("unknown initial_state '" + name +
                        "' (expected all-up or all-down)");
}

void SweepConfig::validate() const {
  hamiltonian(0.0).validate();
  if (sites > max_sites) {
    throw DimensionError("L = " + std::to_string(sites) +
                         " exceeds the cap of " + std::to_string(max_sites));
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("gamma must be positive");
  }
  if (n_steps < 1) throw ValidationError("n_steps must be at least 1");
  if (bx_list.empty()) throw ValidationError("Bx_list must not be empty");
  std::set<double> seen;
  for (double bx : bx_list) {
    if (!(bx > 0.0) || !std::isfinite(bx)) {
      throw ValidationError("Bx_list entries must be > 0, got " +
                            format_number(bx));
    }
    if (!seen.insert(bx).second) {
      throw ValidationError("Bx_list repeats " + format_number(bx));
    }
  }
  if (!std::isfinite(bz_initial) || !std::isfinite(bz_final)) {
    throw ValidationError("Bz_initial and Bz_final must be finite");
  }
  if (bz_initial == bz_final) {
    throw ValidationError("Bz_initial must differ from Bz_final");
  }
  if (shots < 0) throw ValidationError("shots must be >= 0");
  if (noise) {
    NoiseConfig{noise->probability, noise->seed}.validate();
    if (noise->trajectories < 1) {
      throw ValidationError("noise.trajectories must be at least 1");
    }
    if (backend != Backend::GateLevel) {
      throw ValidationError("noise requires the gate-level backend");
    }
  }
  if (quadrature_intervals < 1) {
    throw ValidationError("quadrature_intervals must be at least 1");
  }
  if (output_dir.empty()) throw ValidationError("output_dir must not be empty");
  if (target_m && std::abs(*target_m) > sites / 2.0) {
    throw ValidationError("target_m lies outside [-L/2, L/2]");
  }
}

HamiltonianSpec SweepConfig::hamiltonian(double bx) const {
  HamiltonianSpec spec;
  spec.sites = sites;
  spec.coupling = coupling;
  spec.bz = 0.0;
  spec.bx = bx;
  spec.periodic = periodic;
  return spec;
}

double SweepConfig::initial_magnetization() const {
  return initial_state == InitialState::AllUp ? sites / 2.0 : -sites / 2.0;
}

double SweepConfig::resolved_target_m() const {
  if (target_m) return *target_m;
  return initial_state == InitialState::AllUp ? sites / 2.0 - 0.5
                                              : -sites / 2.0 + 0.5;
}

namespace detail {

int line_of_key(const std::string& text, const std::string& key,
                std::size_t from) {
  const auto pos = text.find("\"" + key + "\"", from);
  if (pos == std::string::npos) return 0;
  return 1 + static_cast<int>(std::count(text.begin(),
                                         text.begin() + static_cast<long>(pos),
                                         '\n'));
}

Json config_to_json(const SweepConfig& c) {
  Json j;
  j["L"] = c.sites;
  j["J"] = c.coupling;
  j["periodic"] = c.periodic;
  j["gamma"] = c.gamma;
  j["n_steps"] = c.n_steps;
  j["Bx_list"] = c.bx_list;
  j["Bz_initial"] = c.bz_initial;
  j["Bz_final"] = c.bz_final;
  j["initial_state"] = to_string(c.initial_state);
  j["backend"] = to_string(c.backend);
  j["shots"] = c.shots;
  if (c.noise) {
    j["noise"] = {{"p", c.noise->probability},
                  {"seed", c.noise->seed},
                  {"trajectories", c.noise->trajectories}};
  }
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir;
  j["fit_model"] = to_string(c.fit_model);
  if (c.target_m) j["target_m"] = *c.target_m;
  if (c.crossing_window) {
    j["crossing_window"] = {c.crossing_window->lo, c.crossing_window->hi};
  }
  j["scale_endpoints"] = c.scale_endpoints;
  j["quadrature_intervals"] = c.quadrature_intervals;
  j["max_sites"] = c.max_sites;
  return j;
}

namespace {

class Reader {
 public:
  Reader(const std::string& text, const std::string& source)
      : text_(text), source_(source) {}

  [[noreturn]] void fail(const std::string& key, const std::string& message,
                         std::size_t from = 0) const {
    throw ConfigError(source_, line_of_key(text_, key, from), message);
  }

  double number(const Json& v, const std::string& key,
                std::size_t from = 0) const {
    if (!v.is_number()) fail(key, "'" + key + "' must be a number", from);
    return v.get<double>();
  }

  int integer(const Json& v, const std::string& key,
              std::size_t from = 0) const {
    if (!v.is_number_integer()) {
      fail(key, "'" + key + "' must be an integer", from);
    }
    const auto x = v.get<std::int64_t>();
    if (x < -1000000000 || x > 1000000000) {
      fail(key, "'" + key + "' is out of range", from);
    }
    return static_cast<int>(x);
  }

  std::uint64_t seed(const Json& v, const std::string& key,
                     std::size_t from = 0) const {
    if (!v.is_number_unsigned()) {
      fail(key, "'" + key + "' must be a non-negative integer", from);
    }
    return v.get<std::uint64_t>();
  }

  std::string string(const Json& v, const std::string& key,
                     std::size_t from = 0) const {
    if (!v.is_string()) fail(key, "'" + key + "' must be a string", from);
    return v.get<std::string>();
  }

  bool boolean(const Json& v, const std::string& key) const {
    if (!v.is_boolean()) fail(key, "'" + key + "' must be true or false");
    return v.get<bool>();
  }

  const std::string& text() const { return text_; }

 private:
  const std::string& text_;
  const std::string& source_;
};

}  // namespace

SweepConfig config_from_json(const Json& value, const std::string& text,
                             const std::string& source) {
  const Reader r(text, source);
  if (!value.is_object()) {
    throw ConfigError(source, 1, "config must be a JSON object");
  }
  for (const char* key : {"L", "gamma", "n_steps", "Bx_list", "Bz_initial",
                          "Bz_final", "seed", "fit_model"}) {
    if (!value.contains(key)) {
      throw ConfigError(source, 0, std::string("missing required key '") +
                                       key + "'");
    }
  }

  SweepConfig c;
  bool noise_seed_given = false;
  using Handler = std::function<void(const Json&)>;
  const std::map<std::string, Handler> handlers = {
      {"L", [&](const Json& v) { c.sites = r.integer(v, "L"); }},
      {"J", [&](const Json& v) { c.coupling = r.number(v, "J"); }},
      {"periodic", [&](const Json& v) { c.periodic = r.boolean(v, "periodic"); }},
      {"gamma", [&](const Json& v) { c.gamma = r.number(v, "gamma"); }},
      {"n_steps", [&](const Json& v) { c.n_steps = r.integer(v, "n_steps"); }},
      {"Bx_list",
       [&](const Json& v) {
         if (!v.is_array()) r.fail("Bx_list", "'Bx_list' must be an array");
         c.bx_list.clear();
         for (const auto& x : v) c.bx_list.push_back(r.number(x, "Bx_list"));
       }},
      {"Bz_initial",
       [&](const Json& v) { c.bz_initial = r.number(v, "Bz_initial"); }},
      {"Bz_final", [&](const Json& v) { c.bz_final = r.number(v, "Bz_final"); }},
      {"initial_state",
       [&](const Json& v) {
         try {
           c.initial_state =
               initial_state_from_string(r.string(v, "initial_state"));
         } catch (const ConfigError&) {
           throw;
         } catch (const ValidationError& e) {
           r.fail("initial_state", e.what());
         }
       }},
      {"backend",
       [&](const Json& v) {
         try {
           c.backend = backend_from_string(r.string(v, "backend"));
         } catch (const ConfigError&) {
           throw;
         } catch (const ValidationError& e) {
           r.fail("backend", e.what());
         }
       }},
      {"shots", [&](const Json& v) { c.shots = r.integer(v, "shots"); }},
      {"noise",
       [&](const Json& v) {
         const std::size_t at = text.find("\"noise\"");
         const std::size_t from = at == std::string::npos ? 0 : at;
         if (!v.is_object()) r.fail("noise", "'noise' must be an object");
         NoiseSettings n;
         for (const auto& [key, x] : v.items()) {
           if (key == "p") {
             n.probability = r.number(x, "p", from);
           } else if (key == "seed") {
             n.seed = r.seed(x, "seed", from);
             noise_seed_given = true;
           } else if (key == "trajectories") {
             n.trajectories = r.integer(x, "trajectories", from);
           } else {
             r.fail(key, "unknown key 'noise." + key + "'", from);
           }
         }
         if (!v.contains("p")) r.fail("noise", "'noise' needs a 'p' entry");
         c.noise = n;
       }},
      {"seed", [&](const Json& v) { c.seed = r.seed(v, "seed"); }},
      {"output_dir",
       [&](const Json& v) { c.output_dir = r.string(v, "output_dir"); }},
      {"fit_model",
       [&](const Json& v) {
         try {
           c.fit_model = fit_model_from_string(r.string(v, "fit_model"));
         } catch (const ConfigError&) {
           throw;
         } catch (const ValidationError& e) {
           r.fail("fit_model", e.what());
         }
       }},
      {"target_m", [&](const Json& v) { c.target_m = r.number(v, "target_m"); }},
      {"crossing_window",
       [&](const Json& v) {
         if (!v.is_array() || v.size() != 2) {
           r.fail("crossing_window", "'crossing_window' must be [lo, hi]");
         }
         c.crossing_window = CrossingWindow{r.number(v[0], "crossing_window"),
                                            r.number(v[1], "crossing_window")};
       }},
      {"scale_endpoints",
       [&](const Json& v) {
         c.scale_endpoints = r.boolean(v, "scale_endpoints");
       }},
      {"quadrature_intervals",
       [&](const Json& v) {
         c.quadrature_intervals = r.integer(v, "quadrature_intervals");
       }},
      {"max_sites",
       [&](const Json& v) { c.max_sites = r.integer(v, "max_sites"); }},
  };

  for (const auto& [key, v] : value.items()) {
    const auto h = handlers.find(key);
    if (h == handlers.end()) r.fail(key, "unknown key '" + key + "'");
    h->second(v);
  }
  // Without its own seed the noise stream hangs off the main seed.
  if (c.noise && !noise_seed_given) {
    c.noise->seed = CounterRng(c.seed, 0, 0x6e6f697365ULL).next_u64();
  }

  // Map invariant violations back to the key that carries them.
  try {
    c.validate();
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    std::string key;
    for (const char* k :
         {"Bx_list", "Bz_initial", "n_steps", "gamma", "shots", "noise",
          "quadrature_intervals", "output_dir", "target_m", "max_sites"}) {
      if (msg.find(k) != std::string::npos) {
        key = k;
        break;
      }
    }
    if (key.empty()) {
      if (msg.find("L = ") != std::string::npos ||
          msg.find("site") != std::string::npos) {
        key = "L";
      } else if (msg.find("coupling") != std::string::npos) {
        key = "J";
      } else if (msg.find("L") != std::string::npos) {
        key = "L";
      }
    }
    throw ConfigError(source, key.empty() ? 0 : line_of_key(text, key), msg);
  }
  return c;
}

}  // namespace detail

SweepConfig parse_sweep_config(const std::string& text,
                               const std::string& source) {
  detail::Json value;
  try {
    value = detail::Json::parse(text);
  } catch (const detail::Json::parse_error& e) {
    const auto byte = std::min<std::size_t>(e.byte, text.size());
    const int line =
        1 + static_cast<int>(std::count(
                text.begin(),
                text.begin() + static_cast<long>(byte > 0 ? byte - 1 : 0),
                '\n'));
    std::string what = e.what();
    // Drop the library prefix "[json.exception.parse_error.101] ".
    if (const auto p = what.find("] "); p != std::string::npos) {
      what = what.substr(p + 2);
    }
    throw ConfigError(source, line, "malformed JSON: " + what);
  }
  return detail::config_from_json(value, text, source);
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  return parse_sweep_config(read_file(path), path.string());
}

std::string sweep_config_to_json(const SweepConfig& config) {
  return detail::config_to_json(config).dump(2) + "\n";
}

}  // namespace xyphase
