#pragma once

#include <string>
#include <variant>
#include <vector>

#include "metaclust/matrix.hpp"

namespace metaclust {

// n x d matrix of finite reals, one row per point.
struct Dataset {
    Matrix points;
    std::string name;
    std::vector<int> point_ids;  // defaults to 0..n-1 when empty at validate()

    std::size_t size() const { return points.rows(); }
    std::size_t dim() const { return points.cols(); }

    // Enforces n >= 1, d >= 1, all entries finite; fills default point ids.
    void validate();
};

struct Labeling {
    std::vector<int> labels;
};

// Partition of a point set. Cluster ids are dense 0..k-1; canonical form
// assigns ids in order of first appearance so partition equality reduces to
// vector equality.
struct Clustering {
    std::vector<int> assignment;
    std::vector<int> point_ids;  // the ids of the points clustered
    int num_clusters = 0;

    std::size_t size() const { return assignment.size(); }

    void validate() const;

    // Same partition of the same points, regardless of cluster id labelling.
    bool same_partition(const Clustering& other) const;
};

// Relabels cluster ids to dense 0..k-1 in order of first appearance.
Clustering canonicalize(const Clustering& c);

// One cluster per distinct label, ids dense by first appearance.
Clustering labels_to_clustering(const Labeling& y);

struct WeightedEdge {
    int u = 0;
    int v = 0;
    double w = 0.0;
};

// Undirected nonnegative-weighted graph on vertices 0..n-1.
struct WeightedGraph {
    int vertex_count = 0;
    std::vector<int> vertex_ids;  // defaults to 0..n-1 when empty at validate()
    std::vector<WeightedEdge> edges;

    // No self-loops, w >= 0, at most one edge per unordered pair.
    void validate();
};

struct LabeledProblem {
    std::variant<Dataset, WeightedGraph> data;
    Clustering truth;
    std::string name;
    std::string provenance;

    bool is_euclidean() const { return std::holds_alternative<Dataset>(data); }
    const Dataset& dataset() const;
    const WeightedGraph& graph() const;

    // truth.point_ids must equal the data's point ids.
    void validate() const;
};

struct MetaRepository {
    std::vector<LabeledProblem> problems;

    std::size_t size() const { return problems.size(); }
    void require_nonempty(const char* op) const;
};

std::vector<int> default_point_ids(std::size_t n);

}  // namespace metaclust
