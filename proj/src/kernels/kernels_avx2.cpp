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

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace chansim::kernels {

namespace {

// Vector elementary functions after Cephes (Moshier). Accuracy is a few
// ulp; argument reduction in sincos is the classic three-part split, valid
// for |x| < 2^30. Larger arguments fall back to libm lane-wise.

inline double hsum(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    const __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// exp(x) for x <= 0; inputs are clamped at -700 (results there are
// ~1e-304, far below any gain floor this kernel is used with).
inline __m256d exp_pd(__m256d x)
{
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);

    x = _mm256_max_pd(x, _mm256_set1_pd(-700.0));
    x = _mm256_min_pd(x, _mm256_set1_pd(700.0));

    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    x = _mm256_sub_pd(x, _mm256_mul_pd(n, c1));
    x = _mm256_sub_pd(x, _mm256_mul_pd(n, c2));

    const __m256d xx = _mm256_mul_pd(x, x);

    __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
    p = _mm256_add_pd(_mm256_mul_pd(p, xx), _mm256_set1_pd(3.02994407707441961300e-2));
    p = _mm256_add_pd(_mm256_mul_pd(p, xx), _mm256_set1_pd(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, x);

    __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
    q = _mm256_add_pd(_mm256_mul_pd(q, xx), _mm256_set1_pd(2.52448340349684104192e-3));
    q = _mm256_add_pd(_mm256_mul_pd(q, xx), _mm256_set1_pd(2.27265548208155028766e-1));
    q = _mm256_add_pd(_mm256_mul_pd(q, xx), _mm256_set1_pd(2.00000000000000000005e0));

    __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    e = _mm256_add_pd(_mm256_set1_pd(1.0), _mm256_add_pd(e, e));

    // ldexp(e, n)
    const __m128i n32 = _mm256_cvtpd_epi32(n);
    const __m256i n64 = _mm256_cvtepi32_epi64(n32);
    const __m256i bits = _mm256_add_epi64(_mm256_castpd_si256(e),
                                          _mm256_slli_epi64(n64, 52));
    return _mm256_castsi256_pd(bits);
}

constexpr double kSincosMaxArg = 1.0e8;

inline void sincos_pd(__m256d x, __m256d* s, __m256d* c)
{
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
    const __m256d sign_bit = _mm256_set1_pd(-0.0);
    const __m256d four_over_pi = _mm256_set1_pd(1.27323954473516268615);
    const __m256d dp1 = _mm256_set1_pd(7.85398125648498535156e-1);
    const __m256d dp2 = _mm256_set1_pd(3.77489470793079817668e-8);
    const __m256d dp3 = _mm256_set1_pd(2.69515142907905952645e-15);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);

    const __m256d orig_sign = _mm256_and_pd(x, sign_bit);
    const __m256d xa = _mm256_and_pd(x, abs_mask);

    // Octant count, forced even so the final quadrant is y/2.
    __m256d y = _mm256_floor_pd(_mm256_mul_pd(xa, four_over_pi));
    const __m256d yh = _mm256_mul_pd(y, half);
    const __m256d odd = _mm256_cmp_pd(_mm256_sub_pd(yh, _mm256_floor_pd(yh)),
                                      _mm256_setzero_pd(), _CMP_NEQ_OQ);
    y = _mm256_add_pd(y, _mm256_and_pd(odd, one));

    __m256d z = _mm256_sub_pd(xa, _mm256_mul_pd(y, dp1));
    z = _mm256_sub_pd(z, _mm256_mul_pd(y, dp2));
    z = _mm256_sub_pd(z, _mm256_mul_pd(y, dp3));

    // quadrant q = (y mod 8) / 2 in {0,1,2,3}
    const __m256d y8 = _mm256_sub_pd(
        y, _mm256_mul_pd(_mm256_set1_pd(8.0),
                         _mm256_floor_pd(_mm256_mul_pd(y, _mm256_set1_pd(0.125)))));
    const __m256d q = _mm256_mul_pd(y8, half);

    const __m256d q1 = _mm256_cmp_pd(q, _mm256_set1_pd(1.0), _CMP_EQ_OQ);
    const __m256d q2 = _mm256_cmp_pd(q, _mm256_set1_pd(2.0), _CMP_EQ_OQ);
    const __m256d q3 = _mm256_cmp_pd(q, _mm256_set1_pd(3.0), _CMP_EQ_OQ);
    const __m256d q_odd = _mm256_or_pd(q1, q3);

    const __m256d zz = _mm256_mul_pd(z, z);

    __m256d sp = _mm256_set1_pd(1.58962301576546568060e-10);
    sp = _mm256_add_pd(_mm256_mul_pd(sp, zz), _mm256_set1_pd(-2.50507477628578072866e-8));
    sp = _mm256_add_pd(_mm256_mul_pd(sp, zz), _mm256_set1_pd(2.75573136213857245213e-6));
    sp = _mm256_add_pd(_mm256_mul_pd(sp, zz), _mm256_set1_pd(-1.98412698295895385996e-4));
    sp = _mm256_add_pd(_mm256_mul_pd(sp, zz), _mm256_set1_pd(8.33333333332211858878e-3));
    sp = _mm256_add_pd(_mm256_mul_pd(sp, zz), _mm256_set1_pd(-1.66666666666666307295e-1));
    const __m256d sin_poly =
        _mm256_add_pd(z, _mm256_mul_pd(_mm256_mul_pd(z, zz), sp));

    __m256d cp = _mm256_set1_pd(-1.13585365213876817300e-11);
    cp = _mm256_add_pd(_mm256_mul_pd(cp, zz), _mm256_set1_pd(2.08757008419747316778e-9));
    cp = _mm256_add_pd(_mm256_mul_pd(cp, zz), _mm256_set1_pd(-2.75573141792967388112e-7));
    cp = _mm256_add_pd(_mm256_mul_pd(cp, zz), _mm256_set1_pd(2.48015872888517179954e-5));
    cp = _mm256_add_pd(_mm256_mul_pd(cp, zz), _mm256_set1_pd(-1.38888888888730564116e-3));
    cp = _mm256_add_pd(_mm256_mul_pd(cp, zz), _mm256_set1_pd(4.16666666666665929218e-2));
    const __m256d cos_poly = _mm256_add_pd(
        _mm256_sub_pd(one, _mm256_mul_pd(half, zz)),
        _mm256_mul_pd(_mm256_mul_pd(zz, zz), cp));

    // sin(q*pi/2 + z): q0 sin, q1 cos, q2 -sin, q3 -cos
    // cos(q*pi/2 + z): q0 cos, q1 -sin, q2 -cos, q3 sin
    __m256d sv = _mm256_blendv_pd(sin_poly, cos_poly, q_odd);
    __m256d cv = _mm256_blendv_pd(cos_poly, sin_poly, q_odd);

    const __m256d s_flip = _mm256_and_pd(_mm256_or_pd(q2, q3), sign_bit);
    const __m256d c_flip = _mm256_and_pd(_mm256_or_pd(q1, q2), sign_bit);
    sv = _mm256_xor_pd(sv, _mm256_xor_pd(s_flip, orig_sign));
    cv = _mm256_xor_pd(cv, c_flip);

    // lanes with |x| beyond the reduction range go through libm
    const __m256d big = _mm256_cmp_pd(xa, _mm256_set1_pd(kSincosMaxArg), _CMP_GT_OQ);
    if (_mm256_movemask_pd(big) != 0) {
        alignas(32) double xs[4], ss[4], cs[4];
        _mm256_store_pd(xs, x);
        _mm256_store_pd(ss, sv);
        _mm256_store_pd(cs, cv);
        const int m = _mm256_movemask_pd(big);
        for (int i = 0; i < 4; ++i) {
            if (m & (1 << i)) {
                ss[i] = std::sin(xs[i]);
                cs[i] = std::cos(xs[i]);
            }
        }
        sv = _mm256_load_pd(ss);
        cv = _mm256_load_pd(cs);
    }

    *s = sv;
    *c = cv;
}

Cplx cis_accum_avx2(const double* amp, const double* phase0,
                    const double* dphase, double t, std::size_t n)
{
    const __m256d tv = _mm256_set1_pd(t);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ph = _mm256_add_pd(
            _mm256_loadu_pd(phase0 + i),
            _mm256_mul_pd(_mm256_loadu_pd(dphase + i), tv));
        __m256d s, c;
        sincos_pd(ph, &s, &c);
        const __m256d a = _mm256_loadu_pd(amp + i);
        acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(a, c));
        acc_im = _mm256_add_pd(acc_im, _mm256_mul_pd(a, s));
    }

    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        const double phase = phase0[i] + dphase[i] * t;
        re += amp[i] * std::cos(phase);
        im += amp[i] * std::sin(phase);
    }
    return {re, im};
}

void cis_eval_avx2(const double* amp, const double* phase0,
                   const double* dphase, double t,
                   double* out_re, double* out_im, std::size_t n)
{
    const __m256d tv = _mm256_set1_pd(t);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ph = _mm256_add_pd(
            _mm256_loadu_pd(phase0 + i),
            _mm256_mul_pd(_mm256_loadu_pd(dphase + i), tv));
        __m256d s, c;
        sincos_pd(ph, &s, &c);
        const __m256d a = _mm256_loadu_pd(amp + i);
        _mm256_storeu_pd(out_re + i, _mm256_mul_pd(a, c));
        _mm256_storeu_pd(out_im + i, _mm256_mul_pd(a, s));
    }
    for (; i < n; ++i) {
        const double phase = phase0[i] + dphase[i] * t;
        out_re[i] = amp[i] * std::cos(phase);
        out_im[i] = amp[i] * std::sin(phase);
    }
}

double triple_dot_avx2(const double* a, const double* b, const double* c,
                       std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d p = _mm256_mul_pd(
            _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)),
            _mm256_loadu_pd(c + i));
        acc = _mm256_add_pd(acc, p);
    }
    double r = hsum(acc);
    for (; i < n; ++i)
        r += a[i] * b[i] * c[i];
    return r;
}

void gauss_gain_avx2(const double* daz, const double* del, double ca,
                     double ce, double g0, double rel_floor, double* out,
                     std::size_t n)
{
    const __m256d cav = _mm256_set1_pd(ca);
    const __m256d cev = _mm256_set1_pd(ce);
    const __m256d g0v = _mm256_set1_pd(g0);
    const __m256d floorv = _mm256_set1_pd(rel_floor);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ax = _mm256_mul_pd(_mm256_loadu_pd(daz + i), cav);
        const __m256d ex = _mm256_mul_pd(_mm256_loadu_pd(del + i), cev);
        const __m256d arg = _mm256_sub_pd(
            _mm256_setzero_pd(),
            _mm256_add_pd(_mm256_mul_pd(ax, ax), _mm256_mul_pd(ex, ex)));
        const __m256d g = _mm256_max_pd(exp_pd(arg), floorv);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(g0v, g));
    }
    for (; i < n; ++i)
        out[i] = pattern_gain_eval(daz[i], del[i], ca, ce, g0, rel_floor);
}

} // namespace

const KernelSet* avx2_kernels()
{
    if (!__builtin_cpu_supports("avx2"))
        return nullptr;
    static const KernelSet set{"avx2", cis_accum_avx2, cis_eval_avx2,
                               triple_dot_avx2, gauss_gain_avx2};
    return &set;
}

} // namespace chansim::kernels

#else // non-x86 build

namespace chansim::kernels {

const KernelSet* avx2_kernels() { return nullptr; }

} // namespace chansim::kernels

#endif
