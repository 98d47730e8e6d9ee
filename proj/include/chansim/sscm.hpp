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

#ifndef CHANSIM_SSCM_HPP
#define CHANSIM_SSCM_HPP

#include <string>
#include <vector>

#include "chansim/rng.hpp"

namespace chansim {

// Calibration constants of the time-cluster / spatial-lobe channel
// generator. Every distribution parameter lives here so a recalibrated set
// can be swapped in from a file (data/sscm_defaults.txt mirrors the
// defaults below).
struct SscmParameters {
    // time clusters
    int tc_count_min = 1;
    int tc_count_max = 6;
    double intercluster_void_ns = 25.0;
    double intercluster_gap_mean_ns = 10.0;
    double cluster_duration_mean_ns = 20.0;
    double cluster_duration_cap_ns = 100.0;
    double cluster_decay_ns = 50.0;
    double cluster_shadow_sigma_db = 3.0;

    // subpaths within a cluster
    int subpaths_min = 1;
    int subpaths_max = 10;
    double subpath_delay_mean_divisor = 4.0; // mean = duration / divisor
    double subpath_decay_ns = 17.0;
    double subpath_jitter_db = 6.0;

    // spatial lobes
    double lobe_count_mean = 2.0;
    int lobe_count_max = 5;
    double lobe_min_separation_deg = 30.0; // divided by the lobe count
    double lobe_elevation_mean_deg = 0.0;
    double lobe_elevation_sigma_deg = 10.0;
    double lobe_elevation_clip_deg = 45.0;
    double mpc_azimuth_sigma_deg = 10.0;
    double mpc_elevation_sigma_deg = 5.0;

    // line-of-sight direct path
    double los_fraction_min = 0.4;
    double los_fraction_max = 0.8;

    static SscmParameters load(const std::string& path);
};

/// One resolvable propagation path.
struct MultipathComponent {
    double delay_ns;   // absolute, includes d/c time of flight
    double power_mw;   // > 0
    double phase_rad;  // [0, 2pi)
    double aod_az_deg; // [0, 360)
    double aod_el_deg; // [-90, 90]
    double aoa_az_deg;
    double aoa_el_deg;
    int cluster_id;
    int lobe_id_tx; // AOD lobe index
    int lobe_id_rx; // AOA lobe index
};

/// MPCs traveling closely in time; neighbors separated by a void interval.
struct TimeCluster {
    int cluster_id;
    double start_excess_ns;
    double end_excess_ns;
    std::vector<int> members; // indices into OmniCir::mpcs, sorted by delay
    double power_mw;
};

enum class LobeSide { Aod, Aoa };

/// A principal departure/arrival direction.
struct SpatialLobe {
    int lobe_id;
    LobeSide side;
    double center_az_deg;
    double center_el_deg;
    std::vector<int> members;
    double power_mw;
};

/// The omnidirectional channel realization.
struct OmniCir {
    std::vector<MultipathComponent> mpcs; // ascending delay
    double tr_distance_m;
    double omni_path_loss_db;
    double total_power_mw; // = 10^((tx_power - path_loss)/10)
    double tx_power_dbm;
    double frequency_ghz;
    bool los;
    std::vector<TimeCluster> clusters;
    std::vector<SpatialLobe> aod_lobes;
    std::vector<SpatialLobe> aoa_lobes;
};

/// Large-scale context for one realization, prepared by the caller.
struct LargeScaleParams {
    double frequency_ghz;
    double tx_power_dbm;
    double ple;
    double shadow_sigma_db;
    double atten_db_per_m = 0.0; // atmospheric attenuation factor
    double extra_loss_db = 0.0;  // foliage, cross-polarization, ...
    bool los = true;
};

int sample_num_time_clusters(Rng& rng, const SscmParameters& p = {});
int sample_num_spatial_lobes(Rng& rng, const SscmParameters& p = {});
/// Clamp of the raw lobe-count draw to [1, lobe_count_max].
int clamp_lobe_count(int raw, const SscmParameters& p = {});

/// Excess-delay layout and power split of the time clusters.
struct ClusterStructure {
    std::vector<double> start_excess_ns;
    std::vector<double> duration_ns;
    std::vector<double> power_fraction; // sums to 1
};

ClusterStructure sample_cluster_structure(int n_tc, Rng& rng,
                                          const SscmParameters& p = {});

OmniCir generate_cir(const LargeScaleParams& ls, double distance_m, Rng& rng,
                     const SscmParameters& p = {});

struct PdpBin {
    double delay_ns;
    double power_mw;
};

struct PowerDelayProfile {
    std::vector<PdpBin> bins; // ascending delay, positive power
    double bandwidth_mhz;
    double total_power_mw;
    double received_power_dbm;
    double rms_delay_spread_ns;
};

// Accumulate taps into delay bins of width 1000/bandwidth ns; bandwidth 0
// collapses everything into a single bin at the power-weighted mean delay.
PowerDelayProfile bin_power_taps(const std::vector<PdpBin>& taps,
                                 double bandwidth_mhz);

PowerDelayProfile compute_pdp(const OmniCir& cir, double bandwidth_mhz);

/// Power-weighted second central moment of the delay distribution.
double rms_delay_spread_ns(const std::vector<PdpBin>& bins);

} // namespace chansim

#endif
