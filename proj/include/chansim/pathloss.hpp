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

#ifndef CHANSIM_PATHLOSS_HPP
#define CHANSIM_PATHLOSS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "chansim/rng.hpp"

namespace chansim {

struct WeatherConditions {
    double pressure_mbar = 1013.25;
    double humidity_pct = 80.0;
    double temperature_c = 20.0;
    double rain_rate_mmhr = 5.0;
};

/// Free-space path loss at the 1 m reference distance, dB. f in [0.5, 100] GHz.
double fspl_db(double frequency_ghz);

// Close-in reference path loss: FSPL(f, 1 m) + 10 n log10(d) + AT + chi.
// d must be >= 1 m.
double ci_path_loss_db(double frequency_ghz, double distance_m, double ple,
                       double atmospheric_db, double shadow_db);

/// One zero-mean Gaussian draw with deviation sigma_db.
double sample_shadow_fading(double sigma_db, Rng& rng);

// Specific attenuation vs frequency for dry air, water vapor, haze and
// rain, dB/m. The built-in data is a digitized reference curve set at
// 1013.25 mbar, 80% humidity, 20 C and 5 mm/hr rain; the vapor column is
// scaled linearly in relative humidity and the rain column linearly in
// rain rate. A user table can be substituted from a text file with columns
//   freq_ghz alpha_dry alpha_vapor alpha_haze alpha_rain_5mmhr
// whitespace-delimited, ascending frequency. Interpolation is linear in
// log10(f) on the table grid.
class AttenuationTable {
  public:
    struct Row {
        double freq_ghz;
        double dry;
        double vapor;
        double haze;
        double rain_5mmhr;
    };

    static const AttenuationTable& builtin();
    static AttenuationTable load(const std::string& path);
    static AttenuationTable from_rows(std::vector<Row> rows);

    double alpha_db_per_m(double frequency_ghz, const WeatherConditions& w) const;

    const std::vector<Row>& rows() const { return rows_; }

  private:
    std::vector<Row> rows_;
};

inline double attenuation_factor(double frequency_ghz, const WeatherConditions& w,
                                 const AttenuationTable& table = AttenuationTable::builtin())
{
    return table.alpha_db_per_m(frequency_ghz, w);
}

enum class SampleKind { Omni, Dir, DirBest };

struct PathLossSample {
    double distance_m;
    double path_loss_db;
    SampleKind kind = SampleKind::Omni;
};

struct PleFit {
    double ple;
    double sigma_db;
    std::size_t count;
};

// Single-parameter least-squares fit of the CI model: the intercept is
// anchored at FSPL(f, 1 m), the slope 10*n is fitted, and sigma is the RMS
// residual. Requires >= 2 samples at >= 2 distinct distances.
PleFit fit_ple_mmse(const std::vector<PathLossSample>& samples,
                    double frequency_ghz);

} // namespace chansim

#endif
