#pragma once

#include <cstddef>
#include <string>

#include "imputebench/dataset.hpp"

namespace imputebench {

struct KnnParams {
    enum class Distance { euclidean, manhattan };
    enum class Weighting { uniform, inverse_distance };

    std::size_t k = 5;
    Distance distance = Distance::euclidean;
    Weighting weighting = Weighting::uniform;
};

KnnParams::Distance knn_distance_from_string(const std::string& text);
KnnParams::Weighting knn_weighting_from_string(const std::string& text);
std::string to_string(KnnParams::Distance d);
std::string to_string(KnnParams::Weighting w);

// Imputes each missing cell from the k nearest rows under a missing-tolerant
// distance: distances are taken over the feature columns observed in both
// rows and rescaled by feature_count / shared_count. Neighbor candidates for
// a cell are rows that observe that column; distances always use the
// original (pre-imputation) values, so the pass never chains guesses. Ties
// in distance break toward the lower row index, which makes the method fully
// deterministic. With no usable candidates the column mean (numeric) or mode
// (categorical) steps in.
Dataset impute_knn(const Dataset& ds, const KnnParams& params);

}  // namespace imputebench
