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

#include "chansim/kernels.hpp"

namespace chansim::kernels {

namespace {

Cplx cis_accum_scalar(const double* amp, const double* phase0,
                      const double* dphase, double t, std::size_t n)
{
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double phase = phase0[i] + dphase[i] * t;
        re += amp[i] * std::cos(phase);
        im += amp[i] * std::sin(phase);
    }
    return {re, im};
}

void cis_eval_scalar(const double* amp, const double* phase0,
                     const double* dphase, double t,
                     double* out_re, double* out_im, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        const double phase = phase0[i] + dphase[i] * t;
        out_re[i] = amp[i] * std::cos(phase);
        out_im[i] = amp[i] * std::sin(phase);
    }
}

double triple_dot_scalar(const double* a, const double* b, const double* c,
                         std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[i] * c[i];
    return acc;
}

void gauss_gain_scalar(const double* daz, const double* del, double ca,
                       double ce, double g0, double rel_floor, double* out,
                       std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = pattern_gain_eval(daz[i], del[i], ca, ce, g0, rel_floor);
}

} // namespace

const KernelSet& scalar_kernels()
{
    static const KernelSet set{"scalar", cis_accum_scalar, cis_eval_scalar,
                               triple_dot_scalar, gauss_gain_scalar};
    return set;
}

} // namespace chansim::kernels
