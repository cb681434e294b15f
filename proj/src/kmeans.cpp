#include "metaclust/kmeans.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "metaclust/rng.hpp"

namespace metaclust {

namespace {

Matrix plusplus_init(const Dataset& x, int k, Rng& rng) {
    const std::size_t n = x.size();
    const std::size_t d = x.dim();
    Matrix centers(static_cast<std::size_t>(k), d);
    std::vector<double> min_sq(n, std::numeric_limits<double>::infinity());
    std::vector<char> chosen(n, 0);

    std::size_t first = static_cast<std::size_t>(rng.uniform_index(n));
    for (std::size_t j = 0; j < d; ++j) centers(0, j) = x.points(first, j);
    chosen[first] = 1;

    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double sq = squared_distance(x.points.row(i),
                                               centers.row(static_cast<std::size_t>(c - 1)), d);
            if (sq < min_sq[i]) min_sq[i] = sq;
            total += min_sq[i];
        }
        std::size_t pick = n;
        if (total > 0.0) {
            double target = rng.uniform() * total;
            for (std::size_t i = 0; i < n; ++i) {
                target -= min_sq[i];
                if (target <= 0.0) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) pick = n - 1;
        } else {
            // All remaining points coincide with chosen centers.
            std::vector<std::size_t> free_points;
            for (std::size_t i = 0; i < n; ++i)
                if (!chosen[i]) free_points.push_back(i);
            pick = free_points.empty()
                       ? static_cast<std::size_t>(rng.uniform_index(n))
                       : free_points[rng.uniform_index(free_points.size())];
        }
        chosen[pick] = 1;
        for (std::size_t j = 0; j < d; ++j)
            centers(static_cast<std::size_t>(c), j) = x.points(pick, j);
    }
    return centers;
}

KMeansResult lloyd(const Dataset& x, const KMeansConfig& cfg, Rng& rng) {
    const std::size_t n = x.size();
    const std::size_t d = x.dim();
    const std::size_t k = static_cast<std::size_t>(cfg.k);

    Matrix centers = plusplus_init(x, cfg.k, rng);
    std::vector<int> assignment(n, 0);
    std::vector<double> point_sq(n, 0.0);
    std::vector<long long> counts(k, 0);
    double inertia = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        // Assign to the nearest center, lowest index on ties.
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            int best_c = 0;
            for (std::size_t c = 0; c < k; ++c) {
                const double sq = squared_distance(x.points.row(i), centers.row(c), d);
                if (sq < best) {
                    best = sq;
                    best_c = static_cast<int>(c);
                }
            }
            assignment[i] = best_c;
            point_sq[i] = best;
        }
        std::fill(counts.begin(), counts.end(), 0);
        for (int a : assignment) ++counts[static_cast<std::size_t>(a)];

        // Refill empty clusters with the point farthest from its center so
        // exactly k clusters survive.
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            std::size_t farthest = n;
            double worst = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[static_cast<std::size_t>(assignment[i])] <= 1) continue;
                if (point_sq[i] > worst) {
                    worst = point_sq[i];
                    farthest = i;
                }
            }
            if (farthest == n) throw std::invalid_argument("kmeans: k exceeds point count");
            --counts[static_cast<std::size_t>(assignment[farthest])];
            assignment[farthest] = static_cast<int>(c);
            counts[c] = 1;
            point_sq[farthest] = 0.0;
        }

        // Centers become cluster means; the returned state is always this
        // consistent (assignment, means, inertia-vs-means) triple.
        Matrix next(k, d);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t c = static_cast<std::size_t>(assignment[i]);
            for (std::size_t j = 0; j < d; ++j) next(c, j) += x.points(i, j);
        }
        double movement = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t j = 0; j < d; ++j)
                next(c, j) /= static_cast<double>(counts[c]);
            movement = std::max(movement, std::sqrt(squared_distance(next.row(c), centers.row(c), d)));
        }
        centers = next;

        double new_inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            new_inertia += squared_distance(x.points.row(i),
                                            centers.row(static_cast<std::size_t>(assignment[i])), d);
        assert(new_inertia <= inertia * (1.0 + 1e-12) + 1e-12);
        inertia = new_inertia;
        if (movement <= cfg.tolerance) break;
    }

    KMeansResult result;
    result.centers = centers;
    result.inertia = inertia;
    result.clustering.assignment = assignment;
    result.clustering.point_ids = x.point_ids.empty() ? default_point_ids(n) : x.point_ids;
    result.clustering.num_clusters = cfg.k;
    return result;
}

}  // namespace

KMeansResult kmeans(const Dataset& x, const KMeansConfig& cfg) {
    if (cfg.k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
    if (static_cast<std::size_t>(cfg.k) > x.size())
        throw std::invalid_argument("kmeans: k exceeds point count");
    if (cfg.restarts < 1) throw std::invalid_argument("kmeans: restarts must be >= 1");

    Rng master(cfg.seed);
    std::optional<KMeansResult> best;
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng = master.split(static_cast<std::uint64_t>(r));
        KMeansResult candidate = lloyd(x, cfg, rng);
        if (!best || candidate.inertia < best->inertia) best = std::move(candidate);
    }
    return *best;
}

}  // namespace metaclust
