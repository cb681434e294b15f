#pragma once

#include <cstdint>
#include <vector>

#include "metaclust/algorithm_spec.hpp"
#include "metaclust/linear_model.hpp"
#include "metaclust/types.hpp"

namespace metaclust {

enum class OutlierMode { erm, regression };

OutlierMode outlier_mode_from_string(const std::string& name);
std::string to_string(OutlierMode mode);

struct OutlierPipelineResult {
    Clustering clustering;         // over all points
    double pruned_silhouette = 0.0;
};

// (a) data mean, (b) drop the floor(theta*n) points farthest from it (ties
// remove the higher index first), (c) cluster the rest with the base
// algorithm, (d) attach each outlier to the nearest cluster centroid.
OutlierPipelineResult outlier_pipeline(const Dataset& x, double theta,
                                       const AlgorithmSpec& base, std::uint64_t seed);

struct OutlierModel {
    double theta = 0.0;
    OutlierMode mode = OutlierMode::erm;
    std::vector<double> grid;
    std::vector<LinearModel> per_theta_models;  // regression mode only
    std::vector<double> mean_ari_per_theta;     // true mean ARI on the repo
    std::vector<double> mean_loss_per_theta;    // Eq.-style mean loss on the repo
};

inline std::vector<double> default_theta_grid() {
    return {0.0, 0.01, 0.02, 0.03, 0.04, 0.05};
}

// erm mode picks the theta with maximal mean ARI over the repo; regression
// mode fits a per-theta (pruned silhouette -> full-data ARI) model and picks
// the theta with maximal mean predicted ARI. Ties go to the smaller theta.
OutlierModel fit_outlier_fraction(const MetaRepository& repo,
                                  const std::vector<double>& theta_grid,
                                  const AlgorithmSpec& base, OutlierMode mode,
                                  std::uint64_t seed, double ridge_lambda = 0.0);

}  // namespace metaclust
