#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace imputebench::kernels {

// Data-parallel inner loops shared by the imputers, the scaler and the
// metrics. Every operation has a scalar reference implementation and an
// AVX2 variant; the backend is picked once at startup from CPUID and can be
// overridden through force_backend() or the IMPUTEBENCH_KERNELS environment
// variable ("scalar", "avx2", "auto"). Missing cells are quiet NaNs; the
// nan_*/masked_* kernels skip them, the plain kernels assume dense input.
//
// Vector variants may reassociate floating-point sums, so cross-backend
// results agree to rounding error, not bit-exactly; within one backend all
// results are bit-deterministic.

enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_available(Backend backend);
void force_backend(Backend backend);  // throws ConfigError if unavailable
std::string_view backend_name(Backend backend);

struct NanSum {
    double sum = 0.0;
    std::size_t count = 0;  // non-NaN entries
};

struct NanMinMax {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;  // non-NaN entries; min/max meaningless when 0
};

// Accumulation over positions observed in *both* inputs.
struct PairSum {
    double sum = 0.0;
    std::size_t count = 0;
};

struct ErrorSums {
    double abs_sum = 0.0;
    double sq_sum = 0.0;
};

double sum(std::span<const double> values);
double dot(std::span<const double> a, std::span<const double> b);
NanSum nan_sum(std::span<const double> values);
NanMinMax nan_minmax(std::span<const double> values);
PairSum masked_sqdiff(std::span<const double> a, std::span<const double> b);
PairSum masked_absdiff(std::span<const double> a, std::span<const double> b);
ErrorSums error_sums(std::span<const double> a, std::span<const double> b);

// Direct access to one backend's implementation, for equivalence tests.
struct Ops {
    double (*sum)(const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    NanSum (*nan_sum)(const double*, std::size_t);
    NanMinMax (*nan_minmax)(const double*, std::size_t);
    PairSum (*masked_sqdiff)(const double*, const double*, std::size_t);
    PairSum (*masked_absdiff)(const double*, const double*, std::size_t);
    ErrorSums (*error_sums)(const double*, const double*, std::size_t);
};

const Ops& backend_ops(Backend backend);  // throws ConfigError if unavailable

}  // namespace imputebench::kernels
