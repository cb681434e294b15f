#pragma once

#include <cstdint>
#include <vector>

#include "metaclust/linear_model.hpp"
#include "metaclust/types.hpp"

namespace metaclust {

struct MetaKConfig {
    std::vector<int> k_range = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    int runs_per_k = 10;
    double ridge_lambda = 0.0;
    // Pool every run's (silhouette, ARI) pair per k; when set, only the
    // best-silhouette run of each problem contributes.
    bool pool_best_run_only = false;
};

struct MetaKModel {
    std::vector<int> k_range;
    int runs_per_k = 10;
    std::vector<LinearModel> models;       // one per k, silhouette -> ARI
    std::vector<int> skipped_problems;     // train-time warning records
};

struct KMeansRun {
    Clustering clustering;
    double silhouette_score = 0.0;
};

// grid[i] holds runs_per_k single-start k-means runs at k_range[i]. Seeds
// are derived from (seed, k, run), so the same seed reproduces the grid.
std::vector<std::vector<KMeansRun>> kmeans_run_grid(const Dataset& x,
                                                    const std::vector<int>& k_range,
                                                    int runs_per_k, std::uint64_t seed);

MetaKModel meta_k_train(const MetaRepository& repo, const MetaKConfig& cfg,
                        std::uint64_t seed);

struct MetaKTableRow {
    int k = 0;
    double best_silhouette = 0.0;
    double predicted_ari = 0.0;
};

struct MetaKPrediction {
    int k_hat = 0;
    Clustering clustering;
    std::vector<MetaKTableRow> table;
};

MetaKPrediction meta_k_predict(const MetaKModel& model, const Dataset& x,
                               std::uint64_t seed);
MetaKPrediction meta_k_predict_on_grid(const MetaKModel& model,
                                       const std::vector<std::vector<KMeansRun>>& grid);

struct BaselineKChoice {
    int k = 0;
    Clustering clustering;
    double silhouette_score = 0.0;
};

// The clustering of globally maximal silhouette across all (k, run) cells;
// ties break to the smallest k, then the lowest run index.
BaselineKChoice silhouette_baseline_k(const Dataset& x, const std::vector<int>& k_range,
                                      int runs_per_k, std::uint64_t seed);
BaselineKChoice silhouette_baseline_on_grid(const std::vector<int>& k_range,
                                            const std::vector<std::vector<KMeansRun>>& grid);

// Best-fit k*: the k whose run achieved maximal ARI against the truth.
int k_star_on_grid(const std::vector<int>& k_range,
                   const std::vector<std::vector<KMeansRun>>& grid,
                   const Clustering& truth);

}  // namespace metaclust
