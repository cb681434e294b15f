#include "metaclust/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace metaclust {

std::vector<int> default_point_ids(std::size_t n) {
    std::vector<int> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<int>(i);
    return ids;
}

void Dataset::validate() {
    if (points.rows() < 1 || points.cols() < 1)
        throw std::invalid_argument("dataset must have n >= 1 and d >= 1");
    for (double v : points.data())
        if (!std::isfinite(v))
            throw std::invalid_argument("dataset contains non-finite entry");
    if (point_ids.empty()) point_ids = default_point_ids(points.rows());
    if (point_ids.size() != points.rows())
        throw std::invalid_argument("point_ids length does not match row count");
}

void Clustering::validate() const {
    if (num_clusters < 1) throw std::invalid_argument("clustering needs k >= 1");
    if (assignment.size() != point_ids.size())
        throw std::invalid_argument("assignment length != point set size");
    if (assignment.empty()) throw std::invalid_argument("empty clustering");
    std::vector<char> seen(static_cast<std::size_t>(num_clusters), 0);
    for (int c : assignment) {
        if (c < 0 || c >= num_clusters)
            throw std::invalid_argument("cluster id out of range");
        seen[static_cast<std::size_t>(c)] = 1;
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("cluster id with no members");
}

bool Clustering::same_partition(const Clustering& other) const {
    if (point_ids != other.point_ids) return false;
    return canonicalize(*this).assignment == canonicalize(other).assignment;
}

Clustering canonicalize(const Clustering& c) {
    Clustering out;
    out.point_ids = c.point_ids;
    out.assignment.reserve(c.assignment.size());
    std::unordered_map<int, int> remap;
    for (int id : c.assignment) {
        auto [it, inserted] = remap.emplace(id, static_cast<int>(remap.size()));
        out.assignment.push_back(it->second);
    }
    out.num_clusters = static_cast<int>(remap.size());
    return out;
}

Clustering labels_to_clustering(const Labeling& y) {
    if (y.labels.empty()) throw std::invalid_argument("empty input");
    Clustering c;
    c.assignment.reserve(y.labels.size());
    std::unordered_map<int, int> remap;
    for (int label : y.labels) {
        auto [it, inserted] = remap.emplace(label, static_cast<int>(remap.size()));
        c.assignment.push_back(it->second);
    }
    c.num_clusters = static_cast<int>(remap.size());
    c.point_ids = default_point_ids(y.labels.size());
    return c;
}

void WeightedGraph::validate() {
    if (vertex_count < 1) throw std::invalid_argument("graph needs >= 1 vertex");
    if (vertex_ids.empty()) vertex_ids = default_point_ids(static_cast<std::size_t>(vertex_count));
    if (vertex_ids.size() != static_cast<std::size_t>(vertex_count))
        throw std::invalid_argument("vertex_ids length does not match vertex count");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop edge");
        if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (!(e.w >= 0.0) || !std::isfinite(e.w))
            throw std::invalid_argument("edge weight must be finite and >= 0");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge for unordered pair");
    }
}

const Dataset& LabeledProblem::dataset() const {
    if (!is_euclidean())
        throw std::invalid_argument("problem '" + name + "' is not Euclidean");
    return std::get<Dataset>(data);
}

const WeightedGraph& LabeledProblem::graph() const {
    if (is_euclidean())
        throw std::invalid_argument("problem '" + name + "' is not a graph");
    return std::get<WeightedGraph>(data);
}

void LabeledProblem::validate() const {
    truth.validate();
    const std::vector<int>& data_ids =
        is_euclidean() ? std::get<Dataset>(data).point_ids
                       : std::get<WeightedGraph>(data).vertex_ids;
    if (truth.point_ids != data_ids)
        throw std::invalid_argument("truth point set does not match data points");
}

void MetaRepository::require_nonempty(const char* op) const {
    if (problems.empty())
        throw std::invalid_argument(std::string(op) + ": repository is empty");
}

}  // namespace metaclust
