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

#ifndef CHANSIM_RNG_HPP
#define CHANSIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "chansim/common.hpp"

namespace chansim {

// Deterministic random source. std::mt19937_64 produces a portable bit
// stream, but the standard distribution adaptors do not, so every transform
// is implemented here. Two Rng objects built from the same seed yield
// bitwise-identical draw sequences on any conforming platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Independent per-run stream derived from (master_seed, stream_index).
    static Rng substream(std::uint64_t master_seed, std::uint64_t index)
    {
        std::uint64_t s = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
        s = splitmix64(s);
        s = splitmix64(s);
        return Rng(s);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform integer on [lo, hi], both inclusive.
    int uniform_int(int lo, int hi)
    {
        const int span = hi - lo + 1;
        int v = lo + static_cast<int>(uniform01() * span);
        return v > hi ? hi : v;
    }

    /// Gaussian via Box-Muller; consumes two uniforms per draw.
    double normal(double mean, double stddev)
    {
        const double u1 = 1.0 - uniform01(); // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * (r * std::cos(kTwoPi * u2));
    }

    double exponential(double mean) { return -mean * std::log(1.0 - uniform01()); }

    /// Exponential with the given mean conditioned on being <= cap
    /// (inverse-CDF of the truncated distribution; single uniform).
    double exponential_truncated(double mean, double cap)
    {
        const double u = uniform01();
        return -mean * std::log1p(-u * (1.0 - std::exp(-cap / mean)));
    }

    /// Poisson via Knuth's product method; fine for small lambda.
    int poisson(double lambda)
    {
        const double limit = std::exp(-lambda);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }

    std::uint64_t raw() { return gen_(); }

  private:
    static std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 gen_;
};

} // namespace chansim

#endif
