#include "metaclust/meta_axiom.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "metaclust/graph_cluster.hpp"

namespace metaclust {

void validate_distance_graph(const WeightedGraph& g) {
    const long long n = g.vertex_count;
    if (static_cast<long long>(g.edges.size()) != n * (n - 1) / 2)
        throw std::invalid_argument("distance function must cover every point pair");
    for (const auto& e : g.edges) {
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            throw std::invalid_argument(
                "zero or invalid distance between distinct points");
    }
}

MetaAxiomModel meta_axiom_train(const std::vector<LabeledProblem>& problems) {
    if (problems.empty()) throw std::invalid_argument("meta_axiom_train: no problems");

    double r = std::numeric_limits<double>::infinity();
    for (const auto& problem : problems) {
        problem.validate();
        const Clustering& truth = problem.truth;
        if (truth.num_clusters < 2)
            throw std::invalid_argument(
                "meta_axiom_train: a training truth has no inter-cluster pair");
        if (problem.is_euclidean()) {
            const Dataset& x = problem.dataset();
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = i + 1; j < x.size(); ++j) {
                    if (truth.assignment[i] == truth.assignment[j]) continue;
                    r = std::min(r, std::sqrt(squared_distance(
                                        x.points.row(i), x.points.row(j), x.dim())));
                }
        } else {
            const WeightedGraph& g = problem.graph();
            validate_distance_graph(g);
            for (const auto& e : g.edges) {
                if (truth.assignment[static_cast<std::size_t>(e.u)] ==
                    truth.assignment[static_cast<std::size_t>(e.v)])
                    continue;
                r = std::min(r, e.w);
            }
        }
    }
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::invalid_argument(
            "meta_axiom_train: minimum inter-cluster distance is not positive");
    return MetaAxiomModel{r};
}

Clustering meta_axiom_cluster(const MetaAxiomModel& model, const WeightedGraph& d) {
    if (!(model.r > 0.0)) throw std::invalid_argument("model threshold must be > 0");
    validate_distance_graph(d);
    return single_linkage_threshold_cluster(d, model.r, /*strict=*/true);
}

WeightedGraph richness_witness(const Clustering& target, double r) {
    target.validate();
    if (!(r > 0.0)) throw std::invalid_argument("richness_witness: r must be > 0");
    WeightedGraph g;
    g.vertex_count = static_cast<int>(target.size());
    g.vertex_ids = target.point_ids;
    const std::size_t n = target.size();
    g.edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same = target.assignment[i] == target.assignment[j];
            g.edges.push_back({static_cast<int>(i), static_cast<int>(j),
                               same ? r / 2.0 : 2.0 * r});
        }
    return g;
}

}  // namespace metaclust
