// AVX2 kernel backend. Compiled with -mavx2 in its own translation unit and
// only ever called after the CPUID check in cpu_supported(). FMA is not used,
// so per-lane arithmetic matches the scalar kernels; only the horizontal
// reduction order differs.

#include "imputebench/kernels.hpp"

#if defined(IMPUTEBENCH_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <limits>

namespace imputebench::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    const __m128d swapped = _mm_unpackhi_pd(pair, pair);
    return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

inline __m256d abs_pd(__m256d v) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    return _mm256_andnot_pd(sign_mask, v);
}

// Lanes that are NaN in v → all-ones mask.
inline __m256d nan_mask(__m256d v) { return _mm256_cmp_pd(v, v, _CMP_UNORD_Q); }

inline int popcount4(int movemask) { return __builtin_popcount(movemask & 0xF); }

}  // namespace

bool cpu_supported() { return __builtin_cpu_supports("avx2"); }

namespace {

double sum_impl(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    }
    double out = hsum(acc);
    for (; i < n; ++i) out += x[i];
    return out;
}

double dot_impl(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, prod);
    }
    double out = hsum(acc);
    for (; i < n; ++i) out += a[i] * b[i];
    return out;
}

NanSum nan_sum_impl(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d miss = nan_mask(v);
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(miss, v));
        count += 4 - popcount4(_mm256_movemask_pd(miss));
    }
    NanSum out;
    out.sum = hsum(acc);
    out.count = count;
    for (; i < n; ++i) {
        if (!std::isnan(x[i])) {
            out.sum += x[i];
            ++out.count;
        }
    }
    return out;
}

NanMinMax nan_minmax_impl(const double* x, std::size_t n) {
    const __m256d pos_inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    const __m256d neg_inf = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    __m256d vmin = pos_inf;
    __m256d vmax = neg_inf;
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d miss = nan_mask(v);
        vmin = _mm256_min_pd(vmin, _mm256_blendv_pd(v, pos_inf, miss));
        vmax = _mm256_max_pd(vmax, _mm256_blendv_pd(v, neg_inf, miss));
        count += 4 - popcount4(_mm256_movemask_pd(miss));
    }
    alignas(32) double mins[4];
    alignas(32) double maxs[4];
    _mm256_store_pd(mins, vmin);
    _mm256_store_pd(maxs, vmax);
    NanMinMax out;
    out.min = std::numeric_limits<double>::infinity();
    out.max = -std::numeric_limits<double>::infinity();
    for (int lane = 0; lane < 4; ++lane) {
        if (mins[lane] < out.min) out.min = mins[lane];
        if (maxs[lane] > out.max) out.max = maxs[lane];
    }
    out.count = count;
    for (; i < n; ++i) {
        const double v = x[i];
        if (std::isnan(v)) continue;
        if (v < out.min) out.min = v;
        if (v > out.max) out.max = v;
        ++out.count;
    }
    if (out.count == 0) {
        out.min = 0.0;
        out.max = 0.0;
    }
    return out;
}

PairSum masked_sqdiff_impl(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        const __m256d miss = nan_mask(d);
        const __m256d sq = _mm256_mul_pd(d, d);
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(miss, sq));
        count += 4 - popcount4(_mm256_movemask_pd(miss));
    }
    PairSum out;
    out.sum = hsum(acc);
    out.count = count;
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        if (!std::isnan(d)) {
            out.sum += d * d;
            ++out.count;
        }
    }
    return out;
}

PairSum masked_absdiff_impl(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        const __m256d miss = nan_mask(d);
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(miss, abs_pd(d)));
        count += 4 - popcount4(_mm256_movemask_pd(miss));
    }
    PairSum out;
    out.sum = hsum(acc);
    out.count = count;
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        if (!std::isnan(d)) {
            out.sum += std::abs(d);
            ++out.count;
        }
    }
    return out;
}

ErrorSums error_sums_impl(const double* a, const double* b, std::size_t n) {
    __m256d abs_acc = _mm256_setzero_pd();
    __m256d sq_acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        abs_acc = _mm256_add_pd(abs_acc, abs_pd(d));
        sq_acc = _mm256_add_pd(sq_acc, _mm256_mul_pd(d, d));
    }
    ErrorSums out;
    out.abs_sum = hsum(abs_acc);
    out.sq_sum = hsum(sq_acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        out.abs_sum += std::abs(d);
        out.sq_sum += d * d;
    }
    return out;
}

}  // namespace

const Ops ops = {
    sum_impl,           dot_impl,           nan_sum_impl, nan_minmax_impl,
    masked_sqdiff_impl, masked_absdiff_impl, error_sums_impl,
};

}  // namespace imputebench::kernels::avx2

#endif  // IMPUTEBENCH_HAVE_AVX2
