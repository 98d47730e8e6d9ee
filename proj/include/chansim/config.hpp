// SPDX-License-Identifier: Apache-2.0
//
// chansim - statistical millimeter-wave channel simulator
// Copyright (C) 2026 chansim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CHANSIM_CONFIG_HPP
#define CHANSIM_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace chansim {

enum class Scenario { UMi, UMa, RMa };
enum class Environment { LOS, NLOS };
enum class Polarization { CoPol, XPol };
enum class ArrayType { ULA, URA };

std::string to_string(Scenario s);
std::string to_string(Environment e);
std::string to_string(Polarization p);
std::string to_string(ArrayType a);

// The full user-facing parameter set. Field defaults are the example
// assignment documented in README.md; parse_config() starts from them and
// overrides whatever the file provides.
struct SimulationConfig {
    double frequency_ghz = 28.0;
    double rf_bandwidth_mhz = 800.0;
    Scenario scenario = Scenario::UMi;
    Environment environment = Environment::LOS;
    double tr_dist_min_m = 100.0;
    double tr_dist_max_m = 100.0;
    double tx_power_dbm = 30.0;
    double pressure_mbar = 1013.25;
    double humidity_pct = 50.0;
    double temperature_c = 20.0;
    double rain_rate_mmhr = 0.0;
    Polarization polarization = Polarization::CoPol;
    bool foliage = false;
    double foliage_atten_dbm_per_m = 0.0;
    double foliage_dist_m = 0.0;
    ArrayType tx_array = ArrayType::ULA;
    ArrayType rx_array = ArrayType::ULA;
    int n_tx = 2;
    int n_rx = 2;
    double tx_spacing_wl = 0.5;
    double rx_spacing_wl = 0.5;
    int w_tx = 2;
    int w_rx = 2;
    double tx_az_hpbw_deg = 10.0;
    double tx_el_hpbw_deg = 10.0;
    double rx_az_hpbw_deg = 10.0;
    double rx_el_hpbw_deg = 10.0;
    double xpd_db = 25.0;

    bool operator==(const SimulationConfig&) const = default;
};

/// Path loss exponent and shadow fading deviation for one (scenario,
/// environment) pair. Users may override both after lookup.
struct ScenarioDefaults {
    double ple;
    double shadow_sigma_db;
};

ScenarioDefaults scenario_defaults(Scenario s, Environment e);

/// Thrown by validate(); carries one message per violated invariant.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

class ValidatedConfig {
  public:
    const SimulationConfig& get() const { return cfg_; }
    const SimulationConfig* operator->() const { return &cfg_; }

  private:
    friend ValidatedConfig validate(const SimulationConfig& raw);
    explicit ValidatedConfig(const SimulationConfig& cfg) : cfg_(cfg) {}
    SimulationConfig cfg_;
};

/// Checks every invariant; throws ConfigError with the complete list of
/// violations. Returns the same values tagged valid.
ValidatedConfig validate(const SimulationConfig& raw);
inline ValidatedConfig validate(const ValidatedConfig& v) { return v; }

// key = value text format, '#' comments. Unknown keys are rejected;
// omitted keys keep their defaults. serialize_config(parse_config(t))
// reparses to an identical config for any valid t.
SimulationConfig parse_config(const std::string& text);
std::string serialize_config(const SimulationConfig& cfg);

/// The 28 config keys in canonical serialization order.
const std::vector<std::string>& config_keys();

} // namespace chansim

#endif
