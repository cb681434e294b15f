#include "metaclust/meta_k.hpp"

#include <algorithm>
#include <stdexcept>

#include "metaclust/kmeans.hpp"
#include "metaclust/metrics.hpp"
#include "metaclust/rng.hpp"

namespace metaclust {

namespace {

std::vector<int> sorted_k_range(std::vector<int> k_range) {
    if (k_range.empty()) throw std::invalid_argument("k_range is empty");
    std::sort(k_range.begin(), k_range.end());
    k_range.erase(std::unique(k_range.begin(), k_range.end()), k_range.end());
    if (k_range.front() < 2)
        throw std::invalid_argument("k_range values must be >= 2");
    return k_range;
}

}  // namespace

std::vector<std::vector<KMeansRun>> kmeans_run_grid(const Dataset& x,
                                                    const std::vector<int>& k_range,
                                                    int runs_per_k, std::uint64_t seed) {
    const std::vector<int> ks = sorted_k_range(k_range);
    if (runs_per_k < 1) throw std::invalid_argument("runs_per_k must be >= 1");
    if (x.size() < static_cast<std::size_t>(ks.back()))
        throw std::invalid_argument("dataset smaller than largest k in range");

    const Rng base(seed);
    std::vector<std::vector<KMeansRun>> grid;
    grid.reserve(ks.size());
    for (int k : ks) {
        std::vector<KMeansRun> runs;
        runs.reserve(static_cast<std::size_t>(runs_per_k));
        const Rng k_stream = base.split(static_cast<std::uint64_t>(k));
        for (int r = 0; r < runs_per_k; ++r) {
            KMeansConfig cfg;
            cfg.k = k;
            cfg.restarts = 1;
            cfg.seed = k_stream.split(static_cast<std::uint64_t>(r)).seed();
            KMeansRun run;
            run.clustering = kmeans(x, cfg).clustering;
            run.silhouette_score = silhouette(x, run.clustering);
            runs.push_back(std::move(run));
        }
        grid.push_back(std::move(runs));
    }
    return grid;
}

MetaKModel meta_k_train(const MetaRepository& repo, const MetaKConfig& cfg,
                        std::uint64_t seed) {
    repo.require_nonempty("meta_k_train");
    const std::vector<int> ks = sorted_k_range(cfg.k_range);

    MetaKModel model;
    model.k_range = ks;
    model.runs_per_k = cfg.runs_per_k;

    std::vector<std::vector<std::vector<double>>> features(ks.size());
    std::vector<std::vector<double>> targets(ks.size());

    const Rng base(seed);
    for (std::size_t p = 0; p < repo.size(); ++p) {
        const auto& problem = repo.problems[p];
        const Dataset& x = problem.dataset();
        if (x.size() < static_cast<std::size_t>(ks.back())) {
            model.skipped_problems.push_back(static_cast<int>(p));
            continue;
        }
        const auto grid = kmeans_run_grid(x, ks, cfg.runs_per_k, base.split(p).seed());
        for (std::size_t ki = 0; ki < ks.size(); ++ki) {
            if (cfg.pool_best_run_only) {
                std::size_t best = 0;
                for (std::size_t r = 1; r < grid[ki].size(); ++r)
                    if (grid[ki][r].silhouette_score > grid[ki][best].silhouette_score)
                        best = r;
                features[ki].push_back({grid[ki][best].silhouette_score});
                targets[ki].push_back(adjusted_rand_index(problem.truth, grid[ki][best].clustering));
            } else {
                for (const auto& run : grid[ki]) {
                    features[ki].push_back({run.silhouette_score});
                    targets[ki].push_back(adjusted_rand_index(problem.truth, run.clustering));
                }
            }
        }
    }
    if (!targets.empty() && targets.front().empty())
        throw std::invalid_argument("meta_k_train: every problem was skipped");

    model.models.reserve(ks.size());
    for (std::size_t ki = 0; ki < ks.size(); ++ki)
        model.models.push_back(fit_linear(features[ki], targets[ki], cfg.ridge_lambda));
    return model;
}

MetaKPrediction meta_k_predict_on_grid(const MetaKModel& model,
                                       const std::vector<std::vector<KMeansRun>>& grid) {
    if (grid.size() != model.k_range.size())
        throw std::invalid_argument("grid does not match the model's k_range");

    MetaKPrediction pred;
    pred.table.reserve(model.k_range.size());
    std::size_t best_ki = 0;
    for (std::size_t ki = 0; ki < model.k_range.size(); ++ki) {
        std::size_t best_run = 0;
        for (std::size_t r = 1; r < grid[ki].size(); ++r)
            if (grid[ki][r].silhouette_score > grid[ki][best_run].silhouette_score)
                best_run = r;
        MetaKTableRow row;
        row.k = model.k_range[ki];
        row.best_silhouette = grid[ki][best_run].silhouette_score;
        row.predicted_ari =
            model.models[ki].predict(std::span<const double>(&row.best_silhouette, 1));
        pred.table.push_back(row);
        if (ki == 0 || row.predicted_ari > pred.table[best_ki].predicted_ari) best_ki = ki;
    }
    pred.k_hat = model.k_range[best_ki];

    std::size_t best_run = 0;
    for (std::size_t r = 1; r < grid[best_ki].size(); ++r)
        if (grid[best_ki][r].silhouette_score > grid[best_ki][best_run].silhouette_score)
            best_run = r;
    pred.clustering = grid[best_ki][best_run].clustering;
    return pred;
}

MetaKPrediction meta_k_predict(const MetaKModel& model, const Dataset& x,
                               std::uint64_t seed) {
    return meta_k_predict_on_grid(
        model, kmeans_run_grid(x, model.k_range, model.runs_per_k, seed));
}

BaselineKChoice silhouette_baseline_on_grid(const std::vector<int>& k_range,
                                            const std::vector<std::vector<KMeansRun>>& grid) {
    if (grid.size() != k_range.size())
        throw std::invalid_argument("grid does not match k_range");
    BaselineKChoice choice;
    bool first = true;
    for (std::size_t ki = 0; ki < k_range.size(); ++ki) {
        for (const auto& run : grid[ki]) {
            if (first || run.silhouette_score > choice.silhouette_score) {
                choice.k = k_range[ki];
                choice.clustering = run.clustering;
                choice.silhouette_score = run.silhouette_score;
                first = false;
            }
        }
    }
    return choice;
}

BaselineKChoice silhouette_baseline_k(const Dataset& x, const std::vector<int>& k_range,
                                      int runs_per_k, std::uint64_t seed) {
    const std::vector<int> ks = sorted_k_range(k_range);
    return silhouette_baseline_on_grid(ks, kmeans_run_grid(x, ks, runs_per_k, seed));
}

int k_star_on_grid(const std::vector<int>& k_range,
                   const std::vector<std::vector<KMeansRun>>& grid,
                   const Clustering& truth) {
    if (grid.size() != k_range.size())
        throw std::invalid_argument("grid does not match k_range");
    int best_k = k_range.front();
    double best_ari = 0.0;
    bool first = true;
    for (std::size_t ki = 0; ki < k_range.size(); ++ki) {
        for (const auto& run : grid[ki]) {
            const double ari = adjusted_rand_index(truth, run.clustering);
            if (first || ari > best_ari) {
                best_ari = ari;
                best_k = k_range[ki];
                first = false;
            }
        }
    }
    return best_k;
}

}  // namespace metaclust
