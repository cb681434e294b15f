#include "metaclust/algo_select.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "metaclust/jacobi.hpp"
#include "metaclust/metrics.hpp"
#include "metaclust/rng.hpp"

namespace metaclust {

namespace {

// Population covariance eigen-extremes of the data matrix.
void covariance_extremes(const Dataset& x, double& sigma_min, double& sigma_max) {
    const std::size_t n = x.size();
    const std::size_t d = x.dim();
    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) mean[j] += x.points(i, j);
    for (double& m : mean) m /= static_cast<double>(n);

    Matrix cov(d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < d; ++a) {
            const double da = x.points(i, a) - mean[a];
            for (std::size_t b = a; b < d; ++b)
                cov(a, b) += da * (x.points(i, b) - mean[b]);
        }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            cov(a, b) /= static_cast<double>(n);
            cov(b, a) = cov(a, b);
        }

    const EigenDecomposition eig = jacobi_eigen(cov);
    sigma_min = eig.values.front();
    sigma_max = eig.values.back();
}

}  // namespace

ProblemFeatures problem_features(const Dataset& x, const Clustering& c) {
    ProblemFeatures f;
    f.d = static_cast<double>(x.dim());
    f.m = static_cast<double>(x.size());
    covariance_extremes(x, f.sigma_min, f.sigma_max);
    f.sil = silhouette(x, c);
    return f;
}

AlgoSelectModel algo_select_train(const MetaRepository& repo, const AlgoSelectConfig& cfg,
                                  std::uint64_t seed) {
    repo.require_nonempty("algo_select_train");
    if (cfg.algorithms.empty())
        throw std::invalid_argument("algo_select_train: empty algorithm list");

    AlgoSelectModel model;
    model.algorithms = cfg.algorithms;
    model.ridge_lambda = cfg.ridge_lambda;

    const Rng base(seed);
    std::vector<std::vector<std::vector<double>>> features(cfg.algorithms.size());
    std::vector<std::vector<double>> targets(cfg.algorithms.size());
    for (std::size_t p = 0; p < repo.size(); ++p) {
        const auto& problem = repo.problems[p];
        const Dataset& x = problem.dataset();
        const Rng problem_stream = base.split(p);
        for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
            ProblemFeatures f;
            double ari = 0.0;
            try {
                const Clustering result =
                    run_algorithm(cfg.algorithms[a], x, problem_stream.split(a).seed());
                f = problem_features(x, result);
                ari = adjusted_rand_index(problem.truth, result);
            } catch (const std::exception&) {
                // Failure row: data-only features, silhouette 0, ARI 0.
                f.d = static_cast<double>(x.dim());
                f.m = static_cast<double>(x.size());
                covariance_extremes(x, f.sigma_min, f.sigma_max);
                f.sil = 0.0;
                ari = 0.0;
            }
            features[a].push_back(f.as_vector());
            targets[a].push_back(ari);
        }
    }

    model.regressors.reserve(cfg.algorithms.size());
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a)
        model.regressors.push_back(fit_linear(features[a], targets[a], cfg.ridge_lambda));
    return model;
}

AlgoSelection algo_select_predict(const AlgoSelectModel& model, const Dataset& x,
                                  std::uint64_t seed) {
    if (model.algorithms.empty() || model.algorithms.size() != model.regressors.size())
        throw std::invalid_argument("algo_select_predict: malformed model");

    const Rng base(seed);
    AlgoSelection selection;
    selection.predicted_ari.assign(model.algorithms.size(),
                                   std::numeric_limits<double>::quiet_NaN());
    std::vector<Clustering> results(model.algorithms.size());
    bool any = false;
    std::size_t best = 0;
    for (std::size_t a = 0; a < model.algorithms.size(); ++a) {
        try {
            results[a] = run_algorithm(model.algorithms[a], x, base.split(a).seed());
            const ProblemFeatures f = problem_features(x, results[a]);
            const std::vector<double> fv = f.as_vector();
            selection.predicted_ari[a] = model.regressors[a].predict(fv);
        } catch (const std::exception&) {
            continue;
        }
        if (!any || selection.predicted_ari[a] > selection.predicted_ari[best]) {
            best = a;
            any = true;
        }
    }
    if (!any) throw std::runtime_error("algo_select_predict: every algorithm failed");
    selection.index = best;
    selection.clustering = results[best];
    return selection;
}

}  // namespace metaclust
