#include "metaclust/graph_cluster.hpp"

#include <cmath>
#include <stdexcept>

#include "metaclust/disjoint_set.hpp"

namespace metaclust {

Clustering single_linkage_threshold_cluster(const WeightedGraph& g, double r, bool strict) {
    if (r < 0.0) throw std::invalid_argument("threshold must be >= 0");
    DisjointSet ds(g.vertex_count);
    for (const auto& e : g.edges) {
        const bool keep = strict ? e.w < r : e.w <= r;
        if (keep) ds.unite(e.u, e.v);
    }
    Clustering raw;
    raw.assignment.resize(static_cast<std::size_t>(g.vertex_count));
    for (int v = 0; v < g.vertex_count; ++v)
        raw.assignment[static_cast<std::size_t>(v)] = ds.find(v);
    raw.point_ids = g.vertex_ids.empty()
                        ? default_point_ids(static_cast<std::size_t>(g.vertex_count))
                        : g.vertex_ids;
    raw.num_clusters = g.vertex_count;  // placeholder; canonicalize fixes it
    return canonicalize(raw);
}

WeightedGraph euclidean_to_graph(const Dataset& x) {
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("euclidean_to_graph needs >= 2 points");
    WeightedGraph g;
    g.vertex_count = static_cast<int>(n);
    g.vertex_ids = x.point_ids.empty() ? default_point_ids(n) : x.point_ids;
    g.edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.edges.push_back({static_cast<int>(i), static_cast<int>(j),
                               std::sqrt(squared_distance(x.points.row(i), x.points.row(j), x.dim()))});
    return g;
}

Dataset normalize_features(const Dataset& x) {
    const std::size_t n = x.size();
    const std::size_t d = x.dim();
    Dataset out = x;
    for (std::size_t j = 0; j < d; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += x.points(i, j);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dev = x.points(i, j) - mean;
            var += dev * dev;
        }
        var /= static_cast<double>(n);
        if (var > 0.0) {
            const double inv_std = 1.0 / std::sqrt(var);
            for (std::size_t i = 0; i < n; ++i)
                out.points(i, j) = (x.points(i, j) - mean) * inv_std;
        } else {
            for (std::size_t i = 0; i < n; ++i) out.points(i, j) = 0.0;
        }
    }
    return out;
}

}  // namespace metaclust
