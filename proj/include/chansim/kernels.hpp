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

#ifndef CHANSIM_KERNELS_HPP
#define CHANSIM_KERNELS_HPP

#include <cmath>
#include <cstddef>
#include <string>

// Arithmetic inner loops of the simulator: phasor accumulation for channel
// matrices and element sweeps, antenna-pattern gain evaluation, and the
// power triple product of the pointing-angle search. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant selected
// at runtime. SIMD variants are equivalence-tested against the reference;
// agreement is to floating-point reassociation accuracy, not bitwise.

namespace chansim::kernels {

struct Cplx {
    double re;
    double im;
};

/// sum_i amp[i] * exp(j * (phase0[i] + dphase[i] * t))
using CisAccumFn = Cplx (*)(const double* amp, const double* phase0,
                            const double* dphase, double t, std::size_t n);

/// out_re[i] + j*out_im[i] = amp[i] * exp(j * (phase0[i] + dphase[i] * t))
using CisEvalFn = void (*)(const double* amp, const double* phase0,
                           const double* dphase, double t,
                           double* out_re, double* out_im, std::size_t n);

/// sum_i a[i] * b[i] * c[i]
using TripleDotFn = double (*)(const double* a, const double* b,
                               const double* c, std::size_t n);

/// out[i] = g0 * max(exp(-((daz[i]*ca)^2 + (del[i]*ce)^2)), rel_floor)
using GaussGainFn = void (*)(const double* daz, const double* del,
                             double ca, double ce, double g0,
                             double rel_floor, double* out, std::size_t n);

struct KernelSet {
    const char* name;
    CisAccumFn cis_accum;
    CisEvalFn cis_eval;
    TripleDotFn triple_dot;
    GaussGainFn gauss_gain;
};

/// Reference scalar kernels; always available.
const KernelSet& scalar_kernels();

/// AVX2 kernels, or nullptr when the CPU lacks AVX2 (or non-x86 build).
const KernelSet* avx2_kernels();

// Active set, chosen once per process: best available variant, overridable
// with CHANSIM_KERNELS=scalar|avx2 in the environment.
const KernelSet& active_kernels();

/// Single-element reference semantics of the gain kernel.
inline double pattern_gain_eval(double daz, double del, double ca, double ce,
                                double g0, double rel_floor)
{
    const double ax = daz * ca;
    const double ex = del * ce;
    const double g = std::exp(-(ax * ax + ex * ex));
    return g0 * (g > rel_floor ? g : rel_floor);
}

} // namespace chansim::kernels

#endif
