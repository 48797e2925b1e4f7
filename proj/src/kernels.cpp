#include "imputebench/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#include "imputebench/errors.hpp"

namespace imputebench::kernels {

// ============================================================================
// Scalar reference kernels
// ============================================================================

namespace scalar {

double sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

NanSum nan_sum(const double* x, std::size_t n) {
    NanSum out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isnan(x[i])) {
            out.sum += x[i];
            ++out.count;
        }
    }
    return out;
}

NanMinMax nan_minmax(const double* x, std::size_t n) {
    NanMinMax out;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i];
        if (std::isnan(v)) continue;
        if (out.count == 0) {
            out.min = v;
            out.max = v;
        } else {
            if (v < out.min) out.min = v;
            if (v > out.max) out.max = v;
        }
        ++out.count;
    }
    return out;
}

PairSum masked_sqdiff(const double* a, const double* b, std::size_t n) {
    PairSum out;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        if (!std::isnan(d)) {  // NaN in either operand propagates
            out.sum += d * d;
            ++out.count;
        }
    }
    return out;
}

PairSum masked_absdiff(const double* a, const double* b, std::size_t n) {
    PairSum out;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        if (!std::isnan(d)) {
            out.sum += std::abs(d);
            ++out.count;
        }
    }
    return out;
}

ErrorSums error_sums(const double* a, const double* b, std::size_t n) {
    ErrorSums out;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        out.abs_sum += std::abs(d);
        out.sq_sum += d * d;
    }
    return out;
}

}  // namespace scalar

namespace {

constexpr Ops kScalarOps = {
    scalar::sum,        scalar::dot,           scalar::nan_sum, scalar::nan_minmax,
    scalar::masked_sqdiff, scalar::masked_absdiff, scalar::error_sums,
};

}  // namespace

// Defined in kernels_avx2.cpp when the backend is compiled in.
#if defined(IMPUTEBENCH_HAVE_AVX2)
namespace avx2 {
extern const Ops ops;
bool cpu_supported();
}  // namespace avx2
#endif

namespace {

bool avx2_usable() {
#if defined(IMPUTEBENCH_HAVE_AVX2)
    return avx2::cpu_supported();
#else
    return false;
#endif
}

Backend detect_backend() {
    if (const char* env = std::getenv("IMPUTEBENCH_KERNELS")) {
        const std::string v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2" && avx2_usable()) return Backend::avx2;
        // "auto" and anything unrecognized fall through to detection
    }
    return avx2_usable() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

bool backend_available(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
            return avx2_usable();
    }
    return false;
}

void force_backend(Backend backend) {
    if (!backend_available(backend)) {
        throw ConfigError("kernel backend not available on this machine: " +
                          std::string(backend_name(backend)));
    }
    g_backend.store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
    }
    return "?";
}

const Ops& backend_ops(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return kScalarOps;
        case Backend::avx2:
#if defined(IMPUTEBENCH_HAVE_AVX2)
            if (avx2_usable()) return avx2::ops;
#endif
            break;
    }
    throw ConfigError("kernel backend not available: " + std::string(backend_name(backend)));
}

namespace {
inline const Ops& active_ops() { return backend_ops(active_backend()); }
}  // namespace

double sum(std::span<const double> values) {
    return active_ops().sum(values.data(), values.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
    return active_ops().dot(a.data(), b.data(), std::min(a.size(), b.size()));
}

NanSum nan_sum(std::span<const double> values) {
    return active_ops().nan_sum(values.data(), values.size());
}

NanMinMax nan_minmax(std::span<const double> values) {
    return active_ops().nan_minmax(values.data(), values.size());
}

PairSum masked_sqdiff(std::span<const double> a, std::span<const double> b) {
    return active_ops().masked_sqdiff(a.data(), b.data(), std::min(a.size(), b.size()));
}

PairSum masked_absdiff(std::span<const double> a, std::span<const double> b) {
    return active_ops().masked_absdiff(a.data(), b.data(), std::min(a.size(), b.size()));
}

ErrorSums error_sums(std::span<const double> a, std::span<const double> b) {
    return active_ops().error_sums(a.data(), b.data(), std::min(a.size(), b.size()));
}

}  // namespace imputebench::kernels
