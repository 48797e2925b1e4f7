#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "imputebench/dataset.hpp"
#include "imputebench/rng.hpp"

namespace imputebench {

// CART trees and random forests, regression and classification. Everything
// here is deterministic: midpoint thresholds, ties broken by lowest column
// then lowest threshold, per-tree rng streams derived from seed + tree index
// so parallel training is bit-identical to sequential.

struct FeatureMatrix {
    std::vector<double> values;  // row-major, complete (no NaN)
    std::size_t rows = 0;
    std::size_t cols = 0;

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    const double* row(std::size_t r) const { return values.data() + r * cols; }

    static FeatureMatrix from_dataset(const Dataset& ds,
                                      const std::vector<std::size_t>& columns);
};

enum class ForestTask { regression, classification };

inline constexpr std::size_t kUnlimitedDepth = std::numeric_limits<std::size_t>::max();

struct ForestParams {
    std::size_t n_trees = 100;
    std::size_t max_depth = kUnlimitedDepth;
    std::size_t min_leaf = 0;  // 0 = task default: 1 classification, 5 regression
    std::size_t mtry = 0;      // 0 = task default: ceil(sqrt p) cls, ceil(p/3) reg
    bool bootstrap = true;
    std::uint64_t seed = 0;

    std::size_t resolved_min_leaf(ForestTask task) const {
        if (min_leaf > 0) return min_leaf;
        return task == ForestTask::classification ? 1 : 5;
    }
    std::size_t resolved_mtry(ForestTask task, std::size_t p) const;
};

struct TreeNode {
    std::int32_t feature = -1;  // -1 = leaf
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    double prediction = 0.0;                  // leaf: mean or majority class index
    std::vector<std::uint32_t> class_counts;  // leaf, classification only

    bool is_leaf() const { return feature < 0; }
};

struct Tree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct Forest {
    ForestTask task = ForestTask::regression;
    std::vector<Tree> trees;
    std::size_t n_features = 0;
    std::size_t n_classes = 0;  // classification only
    ForestParams params;
};

// Single CART tree on the full matrix (no bootstrap), consuming the given
// rng stream for the per-node mtry column draws. For classification, y holds
// class indices in [0, n_classes).
Tree train_tree(const FeatureMatrix& X, const std::vector<double>& y, ForestTask task,
                const ForestParams& params, std::size_t n_classes, Rng& rng);

// n_trees trees, each on a bootstrap resample (or the full data when
// bootstrap is off) with an rng stream derived from params.seed + tree
// index. n_classes = 0 infers the class count from y.
Forest train_forest(const FeatureMatrix& X, const std::vector<double>& y, ForestTask task,
                    const ForestParams& params, std::size_t n_classes = 0,
                    unsigned n_threads = 1);

double predict_tree_row(const Tree& tree, const double* row);
double predict_row(const Forest& forest, const double* row);
std::vector<double> predict(const Forest& forest, const FeatureMatrix& rows,
                            unsigned n_threads = 1);

}  // namespace imputebench
