#include "metaclust/outliers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "metaclust/metrics.hpp"
#include "metaclust/rng.hpp"

namespace metaclust {

OutlierMode outlier_mode_from_string(const std::string& name) {
    if (name == "erm") return OutlierMode::erm;
    if (name == "regression") return OutlierMode::regression;
    throw std::invalid_argument("unknown outlier mode: " + name);
}

std::string to_string(OutlierMode mode) {
    return mode == OutlierMode::erm ? "erm" : "regression";
}

OutlierPipelineResult outlier_pipeline(const Dataset& x, double theta,
                                       const AlgorithmSpec& base, std::uint64_t seed) {
    if (theta < 0.0 || theta >= 1.0)
        throw std::invalid_argument("outlier fraction must be in [0, 1)");
    const std::size_t n = x.size();
    const std::size_t d = x.dim();
    const std::size_t drop = static_cast<std::size_t>(
        std::floor(theta * static_cast<double>(n)));
    if (drop >= n) throw std::invalid_argument("outlier fraction removes all points");

    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) mean[j] += x.points(i, j);
    for (double& m : mean) m /= static_cast<double>(n);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> dist_sq(n);
    for (std::size_t i = 0; i < n; ++i)
        dist_sq[i] = squared_distance(x.points.row(i), mean.data(), d);
    // Farthest first; equal distances remove the higher index first.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (dist_sq[a] != dist_sq[b]) return dist_sq[a] > dist_sq[b];
        return a > b;
    });

    std::vector<char> is_outlier(n, 0);
    for (std::size_t i = 0; i < drop; ++i) is_outlier[order[i]] = 1;

    Dataset kept;
    kept.name = x.name;
    kept.points = Matrix(n - drop, d);
    std::vector<std::size_t> kept_rows;
    kept_rows.reserve(n - drop);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_outlier[i]) continue;
        const std::size_t r = kept_rows.size();
        for (std::size_t j = 0; j < d; ++j) kept.points(r, j) = x.points(i, j);
        kept.point_ids.push_back(x.point_ids.empty() ? static_cast<int>(i)
                                                     : x.point_ids[i]);
        kept_rows.push_back(i);
    }

    const Clustering pruned = run_algorithm(base, kept, seed);

    const std::size_t k = static_cast<std::size_t>(pruned.num_clusters);
    Matrix centroids(k, d);
    std::vector<long long> counts(k, 0);
    for (std::size_t r = 0; r < kept_rows.size(); ++r) {
        const std::size_t c = static_cast<std::size_t>(pruned.assignment[r]);
        for (std::size_t j = 0; j < d; ++j) centroids(c, j) += kept.points(r, j);
        ++counts[c];
    }
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t j = 0; j < d; ++j)
            centroids(c, j) /= static_cast<double>(counts[c]);

    OutlierPipelineResult result;
    result.clustering.assignment.assign(n, 0);
    result.clustering.point_ids = x.point_ids.empty() ? default_point_ids(n) : x.point_ids;
    result.clustering.num_clusters = pruned.num_clusters;
    for (std::size_t r = 0; r < kept_rows.size(); ++r)
        result.clustering.assignment[kept_rows[r]] = pruned.assignment[r];
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_outlier[i]) continue;
        std::size_t best = 0;
        double best_sq = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            const double sq = squared_distance(x.points.row(i), centroids.row(c), d);
            if (sq < best_sq) {
                best_sq = sq;
                best = c;
            }
        }
        result.clustering.assignment[i] = static_cast<int>(best);
    }
    result.pruned_silhouette = silhouette(kept, pruned);
    return result;
}

OutlierModel fit_outlier_fraction(const MetaRepository& repo,
                                  const std::vector<double>& theta_grid,
                                  const AlgorithmSpec& base, OutlierMode mode,
                                  std::uint64_t seed, double ridge_lambda) {
    repo.require_nonempty("fit_outlier_fraction");
    if (theta_grid.empty()) throw std::invalid_argument("empty theta grid");
    std::vector<double> grid = theta_grid;
    std::sort(grid.begin(), grid.end());

    OutlierModel model;
    model.mode = mode;
    model.grid = grid;

    const Rng base_rng(seed);
    std::vector<double> score_per_theta(grid.size(), 0.0);
    for (std::size_t t = 0; t < grid.size(); ++t) {
        std::vector<std::vector<double>> sils;
        std::vector<double> aris;
        double ari_total = 0.0;
        double loss_total = 0.0;
        for (std::size_t p = 0; p < repo.size(); ++p) {
            const auto& problem = repo.problems[p];
            const OutlierPipelineResult run = outlier_pipeline(
                problem.dataset(), grid[t], base, base_rng.split(p).seed());
            const double ari = adjusted_rand_index(problem.truth, run.clustering);
            ari_total += ari;
            loss_total += clustering_loss(problem.truth, run.clustering);
            sils.push_back({run.pruned_silhouette});
            aris.push_back(ari);
        }
        const double mean_ari = ari_total / static_cast<double>(repo.size());
        model.mean_ari_per_theta.push_back(mean_ari);
        model.mean_loss_per_theta.push_back(loss_total / static_cast<double>(repo.size()));

        if (mode == OutlierMode::erm) {
            score_per_theta[t] = mean_ari;
        } else {
            const LinearModel reg = fit_linear(sils, aris, ridge_lambda);
            double predicted_total = 0.0;
            for (const auto& s : sils) predicted_total += reg.predict(s);
            score_per_theta[t] = predicted_total / static_cast<double>(sils.size());
            model.per_theta_models.push_back(reg);
        }
    }

    std::size_t best = 0;
    for (std::size_t t = 1; t < grid.size(); ++t)
        if (score_per_theta[t] > score_per_theta[best]) best = t;
    model.theta = grid[best];
    return model;
}

}  // namespace metaclust
