#include "metaclust/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace metaclust {

namespace {

bool same_point_set(const Clustering& y, const Clustering& z) {
    if (y.point_ids.size() != z.point_ids.size()) return false;
    std::vector<int> a = y.point_ids;
    std::vector<int> b = z.point_ids;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

ContingencyTable contingency_table(const Clustering& y, const Clustering& z) {
    if (!same_point_set(y, z))
        throw std::invalid_argument("clusterings are over different point sets");
    std::unordered_map<int, int> z_of;
    z_of.reserve(z.point_ids.size());
    for (std::size_t i = 0; i < z.point_ids.size(); ++i)
        z_of.emplace(z.point_ids[i], z.assignment[i]);

    ContingencyTable t;
    t.counts = Matrix(static_cast<std::size_t>(y.num_clusters),
                      static_cast<std::size_t>(z.num_clusters));
    t.row_sums.assign(static_cast<std::size_t>(y.num_clusters), 0);
    t.col_sums.assign(static_cast<std::size_t>(z.num_clusters), 0);
    for (std::size_t i = 0; i < y.point_ids.size(); ++i) {
        const int ci = y.assignment[i];
        const int cj = z_of.at(y.point_ids[i]);
        t.counts(static_cast<std::size_t>(ci), static_cast<std::size_t>(cj)) += 1.0;
        ++t.row_sums[static_cast<std::size_t>(ci)];
        ++t.col_sums[static_cast<std::size_t>(cj)];
        ++t.total;
    }
    return t;
}

double rand_index(const Clustering& y, const Clustering& z) {
    if (!same_point_set(y, z))
        throw std::invalid_argument("clusterings are over different point sets");
    const long long n = static_cast<long long>(y.point_ids.size());
    if (n < 2) throw std::invalid_argument("undefined denominator");

    const ContingencyTable t = contingency_table(y, z);
    long long same_y = 0, same_z = 0, same_both = 0;
    for (long long a : t.row_sums) same_y += choose2(a);
    for (long long b : t.col_sums) same_z += choose2(b);
    for (double cell : t.counts.data()) same_both += choose2(static_cast<long long>(cell));

    const long long agreements_unordered =
        choose2(n) - same_y - same_z + 2 * same_both;
    return static_cast<double>(2 * agreements_unordered) /
           static_cast<double>(n * (n - 1));
}

double clustering_loss(const Clustering& y, const Clustering& z) {
    if (!same_point_set(y, z)) return 1.0;
    if (y.point_ids.size() < 2) return 0.0;
    return 1.0 - rand_index(y, z);
}

double adjusted_rand_index(const Clustering& y, const Clustering& z) {
    if (!same_point_set(y, z))
        throw std::invalid_argument("clusterings are over different point sets");
    const long long n = static_cast<long long>(y.point_ids.size());
    if (n < 2) throw std::invalid_argument("ARI needs at least two points");

    const ContingencyTable t = contingency_table(y, z);
    long long sum_rows = 0, sum_cols = 0, index = 0;
    for (long long a : t.row_sums) sum_rows += choose2(a);
    for (long long b : t.col_sums) sum_cols += choose2(b);
    for (double cell : t.counts.data()) index += choose2(static_cast<long long>(cell));

    const double expected = static_cast<double>(sum_rows) *
                            static_cast<double>(sum_cols) /
                            static_cast<double>(choose2(n));
    const double max_index = 0.5 * static_cast<double>(sum_rows + sum_cols);
    if (max_index == expected) {
        // Both all-singletons or both one-cluster; the measure is kept total.
        return y.same_partition(z) ? 1.0 : 0.0;
    }
    return (static_cast<double>(index) - expected) / (max_index - expected);
}

double silhouette(const Dataset& x, const Clustering& c) {
    if (c.num_clusters < 2)
        throw std::invalid_argument("silhouette undefined for a single cluster");
    const std::size_t n = x.size();
    if (c.assignment.size() != n)
        throw std::invalid_argument("clustering does not partition the dataset");

    const std::size_t k = static_cast<std::size_t>(c.num_clusters);
    std::vector<long long> cluster_size(k, 0);
    for (int a : c.assignment) ++cluster_size[static_cast<std::size_t>(a)];

    double total = 0.0;
    std::vector<double> mean_dist(k);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t own = static_cast<std::size_t>(c.assignment[i]);
        if (cluster_size[own] == 1) continue;  // singleton contributes 0

        std::fill(mean_dist.begin(), mean_dist.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double dist = std::sqrt(squared_distance(x.points.row(i), x.points.row(j), x.dim()));
            mean_dist[static_cast<std::size_t>(c.assignment[j])] += dist;
        }
        const double a = mean_dist[own] / static_cast<double>(cluster_size[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t cl = 0; cl < k; ++cl) {
            if (cl == own || cluster_size[cl] == 0) continue;
            b = std::min(b, mean_dist[cl] / static_cast<double>(cluster_size[cl]));
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(n);
}

double rmse_k(const std::vector<int>& k_hat, const std::vector<int>& k_star) {
    if (k_hat.size() != k_star.size())
        throw std::invalid_argument("rmse_k: length mismatch");
    if (k_hat.empty()) throw std::invalid_argument("rmse_k: empty input");
    double s = 0.0;
    for (std::size_t i = 0; i < k_hat.size(); ++i) {
        const double diff = static_cast<double>(k_hat[i] - k_star[i]);
        s += diff * diff;
    }
    return std::sqrt(s / static_cast<double>(k_hat.size()));
}

}  // namespace metaclust
