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

#include "chansim/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "chansim/common.hpp"

namespace chansim {

std::string to_string(Scenario s)
{
    switch (s) {
    case Scenario::UMi: return "UMi";
    case Scenario::UMa: return "UMa";
    case Scenario::RMa: return "RMa";
    }
    return "?";
}

std::string to_string(Environment e)
{
    return e == Environment::LOS ? "LOS" : "NLOS";
}

std::string to_string(Polarization p)
{
    return p == Polarization::CoPol ? "CoPol" : "XPol";
}

std::string to_string(ArrayType a)
{
    return a == ArrayType::ULA ? "ULA" : "URA";
}

ScenarioDefaults scenario_defaults(Scenario s, Environment e)
{
    const bool los = (e == Environment::LOS);
    switch (s) {
    case Scenario::UMi:
    case Scenario::UMa:
        return los ? ScenarioDefaults{2.0, 4.0} : ScenarioDefaults{3.2, 7.0};
    case Scenario::RMa:
        return los ? ScenarioDefaults{2.16, 4.0} : ScenarioDefaults{2.75, 8.0};
    }
    return {2.0, 4.0}; // unreachable
}

namespace {

std::string join_violations(const std::vector<std::string>& v)
{
    std::string out = "invalid configuration:";
    for (const auto& s : v) {
        out += "\n  ";
        out += s;
    }
    return out;
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)),
      violations_(std::move(violations))
{
}

ValidatedConfig validate(const SimulationConfig& raw)
{
    std::vector<std::string> v;

    if (!(raw.frequency_ghz >= 0.5 && raw.frequency_ghz <= 100.0))
        v.push_back("frequency out of [0.5, 100] GHz");
    if (!(raw.rf_bandwidth_mhz >= 0.0 && raw.rf_bandwidth_mhz <= 800.0))
        v.push_back("rf_bandwidth out of [0, 800] MHz");
    if (!(raw.tr_dist_min_m >= 1.0))
        v.push_back("tr_dist_min must be >= 1 m");
    if (!(raw.tr_dist_max_m >= raw.tr_dist_min_m))
        v.push_back("tr_dist_max must be >= tr_dist_min");
    if (!std::isfinite(raw.tx_power_dbm))
        v.push_back("tx_power must be finite");
    if (!(std::isfinite(raw.pressure_mbar) && raw.pressure_mbar > 0.0))
        v.push_back("pressure must be finite and > 0 mbar");
    if (!(raw.humidity_pct >= 0.0 && raw.humidity_pct <= 100.0))
        v.push_back("humidity out of [0, 100] %");
    if (!std::isfinite(raw.temperature_c))
        v.push_back("temperature must be finite");
    if (!(raw.rain_rate_mmhr >= 0.0 && std::isfinite(raw.rain_rate_mmhr)))
        v.push_back("rain_rate must be >= 0 mm/hr");
    if (!(raw.foliage_atten_dbm_per_m >= 0.0 && std::isfinite(raw.foliage_atten_dbm_per_m)))
        v.push_back("foliage_atten must be >= 0 dB/m");
    if (!(raw.foliage_dist_m >= 0.0 && std::isfinite(raw.foliage_dist_m)))
        v.push_back("foliage_dist must be >= 0 m");
    if (!(std::isfinite(raw.xpd_db) && raw.xpd_db >= 0.0))
        v.push_back("xpd must be >= 0 dB");

    if (raw.n_tx < 1)
        v.push_back("n_tx must be >= 1");
    if (raw.n_rx < 1)
        v.push_back("n_rx must be >= 1");
    if (!(raw.tx_spacing_wl > 0.0 && std::isfinite(raw.tx_spacing_wl)))
        v.push_back("tx_spacing must be > 0 wavelengths");
    if (!(raw.rx_spacing_wl > 0.0 && std::isfinite(raw.rx_spacing_wl)))
        v.push_back("rx_spacing must be > 0 wavelengths");

    if (raw.w_tx < 1)
        v.push_back("w_tx must be >= 1");
    else if (raw.n_tx >= 1) {
        if (raw.tx_array == ArrayType::URA && raw.n_tx % raw.w_tx != 0)
            v.push_back("w_tx must divide n_tx for a URA");
        if (raw.tx_array == ArrayType::ULA && raw.w_tx != raw.n_tx)
            v.push_back("w_tx must equal n_tx for a ULA");
    }
    if (raw.w_rx < 1)
        v.push_back("w_rx must be >= 1");
    else if (raw.n_rx >= 1) {
        if (raw.rx_array == ArrayType::URA && raw.n_rx % raw.w_rx != 0)
            v.push_back("w_rx must divide n_rx for a URA");
        if (raw.rx_array == ArrayType::ULA && raw.w_rx != raw.n_rx)
            v.push_back("w_rx must equal n_rx for a ULA");
    }

    auto check_az = [&v](const char* name, double x) {
        if (!(x >= 7.0 && x <= 360.0)) {
            v.push_back(std::string(name) + ": azimuth HPBW out of [7, 360] deg");
        }
    };
    auto check_el = [&v](const char* name, double x) {
        if (!(x >= 7.0 && x <= 45.0)) {
            v.push_back(std::string(name) + ": elevation HPBW out of [7, 45] deg");
        }
    };
    check_az("tx_az_hpbw", raw.tx_az_hpbw_deg);
    check_el("tx_el_hpbw", raw.tx_el_hpbw_deg);
    check_az("rx_az_hpbw", raw.rx_az_hpbw_deg);
    check_el("rx_el_hpbw", raw.rx_el_hpbw_deg);

    if (!v.empty())
        throw ConfigError(std::move(v));
    return ValidatedConfig(raw);
}

namespace {

// Shortest decimal form that parses back to the same double.
std::string format_double(double x)
{
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x)
            break;
    }
    return buf;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw input_error("line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line, const std::string& key)
{
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || v.empty())
        fail(line, "cannot parse value '" + v + "' for key '" + key + "'");
    return x;
}

int parse_int(const std::string& v, int line, const std::string& key)
{
    char* end = nullptr;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0' || v.empty())
        fail(line, "cannot parse integer '" + v + "' for key '" + key + "'");
    return static_cast<int>(x);
}

Scenario parse_scenario(const std::string& v, int line)
{
    if (v == "UMi") return Scenario::UMi;
    if (v == "UMa") return Scenario::UMa;
    if (v == "RMa") return Scenario::RMa;
    fail(line, "scenario must be UMi, UMa or RMa (got '" + v + "')");
}

Environment parse_environment(const std::string& v, int line)
{
    if (v == "LOS") return Environment::LOS;
    if (v == "NLOS") return Environment::NLOS;
    fail(line, "environment must be LOS or NLOS (got '" + v + "')");
}

Polarization parse_polarization(const std::string& v, int line)
{
    if (v == "CoPol" || v == "Co-Pol") return Polarization::CoPol;
    if (v == "XPol" || v == "X-Pol") return Polarization::XPol;
    fail(line, "polarization must be CoPol or XPol (got '" + v + "')");
}

ArrayType parse_array(const std::string& v, int line)
{
    if (v == "ULA") return ArrayType::ULA;
    if (v == "URA") return ArrayType::URA;
    fail(line, "array type must be ULA or URA (got '" + v + "')");
}

bool parse_yesno(const std::string& v, int line)
{
    if (v == "Yes") return true;
    if (v == "No") return false;
    fail(line, "expected Yes or No (got '" + v + "')");
}

} // namespace

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys = {
        "frequency_ghz", "rf_bandwidth_mhz", "scenario", "environment",
        "tr_dist_min_m", "tr_dist_max_m", "tx_power_dbm", "pressure_mbar",
        "humidity_pct", "temperature_c", "rain_rate_mmhr", "polarization",
        "foliage", "foliage_atten_dbm_per_m", "foliage_dist_m", "tx_array",
        "rx_array", "n_tx", "n_rx", "tx_spacing_wl", "rx_spacing_wl",
        "w_tx", "w_rx", "tx_az_hpbw_deg", "tx_el_hpbw_deg", "rx_az_hpbw_deg",
        "rx_el_hpbw_deg", "xpd_db"};
    return keys;
}

SimulationConfig parse_config(const std::string& text)
{
    SimulationConfig cfg; // field defaults

    std::istringstream in(text);
    std::string raw_line;
    int line = 0;
    while (std::getline(in, raw_line)) {
        ++line;
        const auto hash = raw_line.find('#');
        if (hash != std::string::npos)
            raw_line.erase(hash);
        const std::string stripped = trim(raw_line);
        if (stripped.empty())
            continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            fail(line, "expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string val = trim(stripped.substr(eq + 1));
        if (key.empty())
            fail(line, "missing key before '='");

        if (key == "frequency_ghz") cfg.frequency_ghz = parse_double(val, line, key);
        else if (key == "rf_bandwidth_mhz") cfg.rf_bandwidth_mhz = parse_double(val, line, key);
        else if (key == "scenario") cfg.scenario = parse_scenario(val, line);
        else if (key == "environment") cfg.environment = parse_environment(val, line);
        else if (key == "tr_dist_min_m") cfg.tr_dist_min_m = parse_double(val, line, key);
        else if (key == "tr_dist_max_m") cfg.tr_dist_max_m = parse_double(val, line, key);
        else if (key == "tx_power_dbm") cfg.tx_power_dbm = parse_double(val, line, key);
        else if (key == "pressure_mbar") cfg.pressure_mbar = parse_double(val, line, key);
        else if (key == "humidity_pct") cfg.humidity_pct = parse_double(val, line, key);
        else if (key == "temperature_c") cfg.temperature_c = parse_double(val, line, key);
        else if (key == "rain_rate_mmhr") cfg.rain_rate_mmhr = parse_double(val, line, key);
        else if (key == "polarization") cfg.polarization = parse_polarization(val, line);
        else if (key == "foliage") cfg.foliage = parse_yesno(val, line);
        else if (key == "foliage_atten_dbm_per_m") cfg.foliage_atten_dbm_per_m = parse_double(val, line, key);
        else if (key == "foliage_dist_m") cfg.foliage_dist_m = parse_double(val, line, key);
        else if (key == "tx_array") cfg.tx_array = parse_array(val, line);
        else if (key == "rx_array") cfg.rx_array = parse_array(val, line);
        else if (key == "n_tx") cfg.n_tx = parse_int(val, line, key);
        else if (key == "n_rx") cfg.n_rx = parse_int(val, line, key);
        else if (key == "tx_spacing_wl") cfg.tx_spacing_wl = parse_double(val, line, key);
        else if (key == "rx_spacing_wl") cfg.rx_spacing_wl = parse_double(val, line, key);
        else if (key == "w_tx") cfg.w_tx = parse_int(val, line, key);
        else if (key == "w_rx") cfg.w_rx = parse_int(val, line, key);
        else if (key == "tx_az_hpbw_deg") cfg.tx_az_hpbw_deg = parse_double(val, line, key);
        else if (key == "tx_el_hpbw_deg") cfg.tx_el_hpbw_deg = parse_double(val, line, key);
        else if (key == "rx_az_hpbw_deg") cfg.rx_az_hpbw_deg = parse_double(val, line, key);
        else if (key == "rx_el_hpbw_deg") cfg.rx_el_hpbw_deg = parse_double(val, line, key);
        else if (key == "xpd_db") cfg.xpd_db = parse_double(val, line, key);
        else fail(line, "unknown key '" + key + "'");
    }
    return cfg;
}

std::string serialize_config(const SimulationConfig& c)
{
    std::string out;
    auto emit = [&out](const std::string& key, const std::string& val) {
        out += key;
        out += " = ";
        out += val;
        out += '\n';
    };
    emit("frequency_ghz", format_double(c.frequency_ghz));
    emit("rf_bandwidth_mhz", format_double(c.rf_bandwidth_mhz));
    emit("scenario", to_string(c.scenario));
    emit("environment", to_string(c.environment));
    emit("tr_dist_min_m", format_double(c.tr_dist_min_m));
    emit("tr_dist_max_m", format_double(c.tr_dist_max_m));
    emit("tx_power_dbm", format_double(c.tx_power_dbm));
    emit("pressure_mbar", format_double(c.pressure_mbar));
    emit("humidity_pct", format_double(c.humidity_pct));
    emit("temperature_c", format_double(c.temperature_c));
    emit("rain_rate_mmhr", format_double(c.rain_rate_mmhr));
    emit("polarization", to_string(c.polarization));
    emit("foliage", c.foliage ? "Yes" : "No");
    emit("foliage_atten_dbm_per_m", format_double(c.foliage_atten_dbm_per_m));
    emit("foliage_dist_m", format_double(c.foliage_dist_m));
    emit("tx_array", to_string(c.tx_array));
    emit("rx_array", to_string(c.rx_array));
    emit("n_tx", std::to_string(c.n_tx));
    emit("n_rx", std::to_string(c.n_rx));
    emit("tx_spacing_wl", format_double(c.tx_spacing_wl));
    emit("rx_spacing_wl", format_double(c.rx_spacing_wl));
    emit("w_tx", std::to_string(c.w_tx));
    emit("w_rx", std::to_string(c.w_rx));
    emit("tx_az_hpbw_deg", format_double(c.tx_az_hpbw_deg));
    emit("tx_el_hpbw_deg", format_double(c.tx_el_hpbw_deg));
    emit("rx_az_hpbw_deg", format_double(c.rx_az_hpbw_deg));
    emit("rx_el_hpbw_deg", format_double(c.rx_el_hpbw_deg));
    emit("xpd_db", format_double(c.xpd_db));
    return out;
}

} // namespace chansim
