#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metaclust/algorithm_spec.hpp"
#include "metaclust/linear_model.hpp"
#include "metaclust/types.hpp"

namespace metaclust {

// Phi(X, Pi) = (d, m, sigma_min, sigma_max, sil): dimensionality, example
// count, extreme eigenvalues of the population covariance, and the
// silhouette of the candidate clustering.
struct ProblemFeatures {
    double d = 0.0;
    double m = 0.0;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double sil = 0.0;

    std::vector<double> as_vector() const { return {d, m, sigma_min, sigma_max, sil}; }
};

ProblemFeatures problem_features(const Dataset& x, const Clustering& c);

struct AlgoSelectModel {
    std::vector<AlgorithmSpec> algorithms;
    std::vector<LinearModel> regressors;  // per-algorithm ARI estimators
    std::string regressor_kind = "ridge";
    double ridge_lambda = 1e-3;
};

struct AlgoSelectConfig {
    std::vector<AlgorithmSpec> algorithms = default_algorithm_family();
    double ridge_lambda = 1e-3;
};

// Runs every algorithm on every problem and fits one ARI regressor per
// algorithm. A failed run contributes a training row with the data-only
// features, silhouette 0 and ARI 0; failures never abort the sweep.
AlgoSelectModel algo_select_train(const MetaRepository& repo, const AlgoSelectConfig& cfg,
                                  std::uint64_t seed);

struct AlgoSelection {
    std::size_t index = 0;
    Clustering clustering;
    std::vector<double> predicted_ari;  // NaN where the algorithm failed
};

// Runs each algorithm, featurizes the result, and picks the argmax of the
// predicted ARI (smallest index on ties). Failed algorithms are excluded;
// all failing is an error.
AlgoSelection algo_select_predict(const AlgoSelectModel& model, const Dataset& x,
                                  std::uint64_t seed);

}  // namespace metaclust
