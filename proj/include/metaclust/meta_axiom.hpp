#pragma once

#include <vector>

#include "metaclust/types.hpp"

namespace metaclust {

struct MetaAxiomModel {
    double r = 0.0;  // learned single-linkage threshold, always > 0
};

// Rejects graphs that are not valid distance functions: every unordered
// pair must carry exactly one finite weight, strictly positive between
// distinct points.
void validate_distance_graph(const WeightedGraph& g);

// r = the minimum distance between points in different truth clusters,
// across all training problems. Euclidean problems use point distances;
// graph problems must be distance-complete. Every truth needs >= 2 clusters
// and the minimum must be positive.
MetaAxiomModel meta_axiom_train(const std::vector<LabeledProblem>& problems);

// Connected components under the strict cutoff w < r. Strictness keeps a
// test edge exactly at the learned minimum inter-cluster distance from
// merging across the implied boundary.
Clustering meta_axiom_cluster(const MetaAxiomModel& model, const WeightedGraph& d);

// Distance function with intra-cluster distances r/2 and inter-cluster
// distances 2r; meta_axiom_cluster recovers the target on it.
WeightedGraph richness_witness(const Clustering& target, double r);

}  // namespace metaclust
