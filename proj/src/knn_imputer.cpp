#include "imputebench/knn_imputer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "imputebench/column_stats.hpp"
#include "imputebench/errors.hpp"
#include "imputebench/kernels.hpp"

namespace imputebench {

KnnParams::Distance knn_distance_from_string(const std::string& text) {
    if (text == "euclidean") return KnnParams::Distance::euclidean;
    if (text == "manhattan") return KnnParams::Distance::manhattan;
    throw ConfigError("unknown knn distance: '" + text + "'");
}

KnnParams::Weighting knn_weighting_from_string(const std::string& text) {
    if (text == "uniform") return KnnParams::Weighting::uniform;
    if (text == "inverse-distance" || text == "inverse_distance") {
        return KnnParams::Weighting::inverse_distance;
    }
    throw ConfigError("unknown knn weighting: '" + text + "'");
}

std::string to_string(KnnParams::Distance d) {
    return d == KnnParams::Distance::euclidean ? "euclidean" : "manhattan";
}

std::string to_string(KnnParams::Weighting w) {
    return w == KnnParams::Weighting::uniform ? "uniform" : "inverse-distance";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Neighbor {
    double distance;
    std::size_t row;
};

double vote(const Dataset& ds, std::size_t col, const std::vector<Neighbor>& picked,
            KnnParams::Weighting weighting) {
    // Zero-distance neighbors dominate inverse-distance weighting; average
    // over just those when any exist.
    bool any_zero = false;
    if (weighting == KnnParams::Weighting::inverse_distance) {
        for (const auto& nb : picked) any_zero = any_zero || nb.distance == 0.0;
    }
    auto weight_of = [&](const Neighbor& nb) {
        if (weighting == KnnParams::Weighting::uniform) return 1.0;
        if (any_zero) return nb.distance == 0.0 ? 1.0 : 0.0;
        return 1.0 / nb.distance;
    };

    if (ds.column(col).kind == ColumnKind::categorical) {
        std::map<double, double> level_weight;
        for (const auto& nb : picked) {
            level_weight[ds.at(nb.row, col)] += weight_of(nb);
        }
        double best = level_weight.begin()->first;
        double best_weight = level_weight.begin()->second;
        for (const auto& [level, w] : level_weight) {
            if (w > best_weight) {
                best = level;
                best_weight = w;
            }
        }
        return best;
    }

    double num = 0.0;
    double den = 0.0;
    for (const auto& nb : picked) {
        const double w = weight_of(nb);
        num += w * ds.at(nb.row, col);
        den += w;
    }
    return num / den;
}

}  // namespace

Dataset impute_knn(const Dataset& ds, const KnnParams& params) {
    const std::size_t n = ds.row_count();
    if (params.k == 0) throw ConfigError("impute_knn: k must be at least 1");
    if (params.k >= n) throw ConfigError("impute_knn: k must be below the row count");

    const std::vector<std::size_t> features = ds.feature_indices();
    const std::size_t p = features.size();
    if (p == 0) throw DataError("impute_knn: dataset has no feature columns");

    // Dense feature matrix; rows are contiguous for the distance kernels.
    std::vector<double> grid(n * p);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < p; ++j) grid[r * p + j] = ds.at(r, features[j]);
    }
    auto row_span = [&](std::size_t r) {
        return std::span<const double>(grid.data() + r * p, p);
    };

    Dataset out = ds;
    std::vector<double> distances(n);
    std::vector<Neighbor> candidates;

    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::size_t> missing_cols;
        for (std::size_t c = 0; c < ds.col_count(); ++c) {
            if (ds.missing_at(r, c)) missing_cols.push_back(c);
        }
        if (missing_cols.empty()) continue;
        std::size_t observed = 0;
        for (std::size_t j = 0; j < p; ++j) {
            if (!is_missing(grid[r * p + j])) ++observed;
        }
        if (observed == 0) {
            throw DataError("impute_knn: row " + std::to_string(r) +
                            " has no observed feature values");
        }

        const auto self = row_span(r);
        for (std::size_t s = 0; s < n; ++s) {
            if (s == r) {
                distances[s] = kInf;
                continue;
            }
            if (params.distance == KnnParams::Distance::euclidean) {
                const auto acc = kernels::masked_sqdiff(self, row_span(s));
                distances[s] = acc.count == 0
                                   ? kInf
                                   : std::sqrt(acc.sum * static_cast<double>(p) /
                                               static_cast<double>(acc.count));
            } else {
                const auto acc = kernels::masked_absdiff(self, row_span(s));
                distances[s] = acc.count == 0
                                   ? kInf
                                   : acc.sum * static_cast<double>(p) /
                                         static_cast<double>(acc.count);
            }
        }

        for (std::size_t col : missing_cols) {
            candidates.clear();
            for (std::size_t s = 0; s < n; ++s) {
                if (distances[s] < kInf && !ds.missing_at(s, col)) {
                    candidates.push_back({distances[s], s});
                }
            }
            if (candidates.empty()) {
                out.set(r, col,
                        conform_to_kind(column_fill_statistic(ds, col), ds.column(col)));
                continue;
            }
            const std::size_t take = std::min(params.k, candidates.size());
            std::partial_sort(candidates.begin(), candidates.begin() + take, candidates.end(),
                              [](const Neighbor& a, const Neighbor& b) {
                                  return a.distance != b.distance ? a.distance < b.distance
                                                                  : a.row < b.row;
                              });
            candidates.resize(take);
            const double value = vote(ds, col, candidates, params.weighting);
            out.set(r, col, conform_to_kind(value, ds.column(col)));
        }
    }
    return out;
}

}  // namespace imputebench
