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

#include "chansim/pathloss.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "chansim/common.hpp"

namespace chansim {

double fspl_db(double frequency_ghz)
{
    if (!(frequency_ghz >= 0.5 && frequency_ghz <= 100.0))
        throw input_error("frequency out of [0.5, 100] GHz");
    return 32.4 + 20.0 * std::log10(frequency_ghz);
}

double ci_path_loss_db(double frequency_ghz, double distance_m, double ple,
                       double atmospheric_db, double shadow_db)
{
    if (!(distance_m >= 1.0))
        throw input_error("T-R distance must be >= 1 m");
    return fspl_db(frequency_ghz) + 10.0 * ple * std::log10(distance_m) +
           atmospheric_db + shadow_db;
}

double sample_shadow_fading(double sigma_db, Rng& rng)
{
    if (!(sigma_db >= 0.0))
        throw input_error("shadow fading sigma must be >= 0 dB");
    return rng.normal(0.0, sigma_db);
}

namespace {

// Specific attenuation in dB/m at 1013.25 mbar, 80% relative humidity,
// 20 C; rain column at a 5 mm/hr reference rate. Digitized reference
// curves on a log-frequency grid; data/atmospheric_attenuation.txt
// carries the same table for user substitution.
constexpr AttenuationTable::Row kBuiltinRows[] = {
    //  f GHz      dry        vapor      haze       rain@5mm/hr
    {0.5, 5.00e-6, 4.00e-8, 1.00e-8, 3.00e-8},
    {1.0, 5.40e-6, 9.00e-8, 4.00e-8, 1.20e-7},
    {1.5, 5.80e-6, 1.80e-7, 9.00e-8, 2.80e-7},
    {2.0, 6.20e-6, 3.70e-7, 1.50e-7, 4.70e-7},
    {3.0, 7.00e-6, 7.40e-7, 3.20e-7, 1.40e-6},
    {4.0, 7.70e-6, 1.29e-6, 5.50e-7, 3.40e-6},
    {5.0, 8.30e-6, 2.21e-6, 8.30e-7, 7.00e-6},
    {7.0, 9.20e-6, 4.97e-6, 1.60e-6, 2.20e-5},
    {10.0, 1.02e-5, 1.23e-5, 3.20e-6, 7.80e-5},
    {15.0, 1.17e-5, 4.42e-5, 6.90e-6, 2.30e-4},
    {20.0, 1.40e-5, 1.84e-4, 1.20e-5, 4.40e-4},
    {22.24, 1.55e-5, 3.50e-4, 1.46e-5, 5.40e-4},
    {25.0, 1.80e-5, 2.58e-4, 1.82e-5, 7.00e-4},
    {28.0, 2.20e-5, 1.93e-4, 2.26e-5, 9.60e-4},
    {30.0, 2.60e-5, 1.75e-4, 2.57e-5, 1.15e-3},
    {35.0, 4.30e-5, 1.56e-4, 3.43e-5, 1.60e-3},
    {40.0, 8.00e-5, 1.62e-4, 4.40e-5, 2.05e-3},
    {45.0, 1.70e-4, 1.80e-4, 5.47e-5, 2.50e-3},
    {50.0, 4.50e-4, 2.02e-4, 6.63e-5, 2.90e-3},
    {52.0, 9.00e-4, 2.13e-4, 7.12e-5, 3.06e-3},
    {54.0, 2.50e-3, 2.26e-4, 7.62e-5, 3.21e-3},
    {56.0, 7.00e-3, 2.39e-4, 8.13e-5, 3.36e-3},
    {58.0, 1.25e-2, 2.54e-4, 8.66e-5, 3.51e-3},
    {60.0, 1.50e-2, 2.70e-4, 9.20e-5, 3.65e-3},
    {62.0, 1.30e-2, 2.89e-4, 9.75e-5, 3.78e-3},
    {64.0, 8.00e-3, 3.07e-4, 1.03e-4, 3.91e-3},
    {66.0, 4.00e-3, 3.28e-4, 1.09e-4, 4.03e-3},
    {68.0, 2.00e-3, 3.50e-4, 1.15e-4, 4.15e-3},
    {70.0, 1.10e-3, 3.74e-4, 1.21e-4, 4.26e-3},
    {75.0, 5.00e-4, 4.42e-4, 1.36e-4, 4.52e-3},
    {80.0, 3.30e-4, 5.34e-4, 1.53e-4, 4.75e-3},
    {90.0, 2.50e-4, 7.54e-4, 1.87e-4, 5.14e-3},
    {100.0, 2.40e-4, 8.28e-4, 2.25e-4, 5.45e-3},
};

constexpr double kReferenceHumidityPct = 80.0;
constexpr double kReferenceRainMmhr = 5.0;

} // namespace

const AttenuationTable& AttenuationTable::builtin()
{
    static const AttenuationTable table = from_rows(
        std::vector<Row>(std::begin(kBuiltinRows), std::end(kBuiltinRows)));
    return table;
}

AttenuationTable AttenuationTable::from_rows(std::vector<Row> rows)
{
    if (rows.size() < 2)
        throw input_error("attenuation table needs at least 2 rows");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].freq_ghz > rows[i - 1].freq_ghz))
            throw input_error("attenuation table frequencies must be ascending");
    }
    for (const Row& r : rows) {
        if (r.dry < 0 || r.vapor < 0 || r.haze < 0 || r.rain_5mmhr < 0)
            throw input_error("attenuation table values must be >= 0");
    }
    AttenuationTable t;
    t.rows_ = std::move(rows);
    return t;
}

AttenuationTable AttenuationTable::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open attenuation table: " + path);

    std::vector<Row> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#%");
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        Row r{};
        if (!(ls >> r.freq_ghz))
            continue; // blank/comment line
        if (!(ls >> r.dry >> r.vapor >> r.haze >> r.rain_5mmhr))
            throw input_error(path + " line " + std::to_string(lineno) +
                              ": expected 5 columns");
        rows.push_back(r);
    }
    return from_rows(std::move(rows));
}

double AttenuationTable::alpha_db_per_m(double frequency_ghz,
                                        const WeatherConditions& w) const
{
    if (!(frequency_ghz >= rows_.front().freq_ghz &&
          frequency_ghz <= rows_.back().freq_ghz)) {
        throw input_error("frequency outside attenuation table range");
    }

    auto it = std::lower_bound(rows_.begin(), rows_.end(), frequency_ghz,
                               [](const Row& r, double f) { return r.freq_ghz < f; });
    if (it == rows_.begin())
        ++it;
    const Row& hi = *it;
    const Row& lo = *(it - 1);

    const double u = (std::log10(frequency_ghz) - std::log10(lo.freq_ghz)) /
                     (std::log10(hi.freq_ghz) - std::log10(lo.freq_ghz));
    auto lerp = [u](double a, double b) { return a + u * (b - a); };

    const double dry = lerp(lo.dry, hi.dry);
    const double vapor = lerp(lo.vapor, hi.vapor) * (w.humidity_pct / kReferenceHumidityPct);
    const double haze = lerp(lo.haze, hi.haze);
    const double rain = lerp(lo.rain_5mmhr, hi.rain_5mmhr) * (w.rain_rate_mmhr / kReferenceRainMmhr);
    return dry + vapor + haze + rain;
}

PleFit fit_ple_mmse(const std::vector<PathLossSample>& samples,
                    double frequency_ghz)
{
    if (samples.size() < 2)
        throw input_error("PLE fit needs at least 2 samples");

    bool distinct = false;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].distance_m != samples[0].distance_m) {
            distinct = true;
            break;
        }
    }
    if (!distinct)
        throw input_error("PLE fit needs at least 2 distinct distances");

    const double anchor = fspl_db(frequency_ghz);
    double sum_ab = 0.0;
    double sum_bb = 0.0;
    for (const PathLossSample& s : samples) {
        const double a = s.path_loss_db - anchor;
        const double b = 10.0 * std::log10(s.distance_m);
        sum_ab += a * b;
        sum_bb += b * b;
    }
    const double n_hat = sum_ab / sum_bb;

    double ss = 0.0;
    for (const PathLossSample& s : samples) {
        const double a = s.path_loss_db - anchor;
        const double b = 10.0 * std::log10(s.distance_m);
        const double r = a - n_hat * b;
        ss += r * r;
    }
    const double sigma_hat = std::sqrt(ss / static_cast<double>(samples.size()));
    return {n_hat, sigma_hat, samples.size()};
}

} // namespace chansim
