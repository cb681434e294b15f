#include "metaclust/agglomerative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace metaclust {

Linkage linkage_from_string(const std::string& name) {
    if (name == "single") return Linkage::single;
    if (name == "complete") return Linkage::complete;
    if (name == "ward") return Linkage::ward;
    throw std::invalid_argument("unknown linkage: " + name);
}

std::string to_string(Linkage linkage) {
    switch (linkage) {
        case Linkage::single: return "single";
        case Linkage::complete: return "complete";
        case Linkage::ward: return "ward";
    }
    return "?";
}

Clustering agglomerative(const Dataset& x, Linkage linkage, int k) {
    const std::size_t n = x.size();
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("agglomerative: k must be in [1, n]");

    // Cluster i starts as point i and keeps its index through merges.
    Matrix dist(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double sq = squared_distance(x.points.row(i), x.points.row(j), x.dim());
            const double value = linkage == Linkage::ward ? sq : std::sqrt(sq);
            dist(i, j) = value;
            dist(j, i) = value;
        }

    std::vector<char> active(n, 1);
    std::vector<double> size(n, 1.0);
    std::vector<int> cluster_of(n);
    for (std::size_t i = 0; i < n; ++i) cluster_of[i] = static_cast<int>(i);

    for (std::size_t remaining = n; remaining > static_cast<std::size_t>(k); --remaining) {
        std::size_t best_i = 0, best_j = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!active[j]) continue;
                if (dist(i, j) < best) {
                    best = dist(i, j);
                    best_i = i;
                    best_j = j;
                }
            }
        }

        for (std::size_t h = 0; h < n; ++h) {
            if (!active[h] || h == best_i || h == best_j) continue;
            double merged;
            switch (linkage) {
                case Linkage::single:
                    merged = std::min(dist(h, best_i), dist(h, best_j));
                    break;
                case Linkage::complete:
                    merged = std::max(dist(h, best_i), dist(h, best_j));
                    break;
                case Linkage::ward: {
                    const double ni = size[best_i], nj = size[best_j], nh = size[h];
                    merged = ((ni + nh) * dist(h, best_i) + (nj + nh) * dist(h, best_j) -
                              nh * dist(best_i, best_j)) /
                             (ni + nj + nh);
                    break;
                }
            }
            dist(h, best_i) = merged;
            dist(best_i, h) = merged;
        }
        size[best_i] += size[best_j];
        active[best_j] = 0;
        for (std::size_t p = 0; p < n; ++p)
            if (cluster_of[p] == static_cast<int>(best_j))
                cluster_of[p] = static_cast<int>(best_i);
    }

    Clustering raw;
    raw.assignment = cluster_of;
    raw.point_ids = x.point_ids.empty() ? default_point_ids(n) : x.point_ids;
    raw.num_clusters = static_cast<int>(n);  // placeholder; canonicalize fixes it
    Clustering out = canonicalize(raw);
    return out;
}

}  // namespace metaclust
