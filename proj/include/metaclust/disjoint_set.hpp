#pragma once

#include <cstdint>
#include <vector>

namespace metaclust {

// What a union produced, with the pre-merge quantities callers need to
// account for the |A|*|B| pairs that just became intra-cluster.
struct MergeReport {
    bool merged = false;  // false when a and b already shared a root
    int size_a = 0;       // pre-merge size of a's component
    int size_b = 0;       // pre-merge size of b's component
    std::int64_t same_label_pairs = 0;  // cross pairs whose labels agree
};

// Union-find with path compression and union by size. Each root carries its
// member list and, when labels were supplied, a dense per-label histogram.
// Histograms make the cross-pair agreement count O(#labels) per merge; the
// member lists are the reference path used by tests.
class DisjointSet {
public:
    explicit DisjointSet(int n) : DisjointSet(n, {}, 0) {}

    DisjointSet(int n, const std::vector<int>& labels, int num_labels);

    int find(int x);

    // No-op (merged=false) when a and b already share a root.
    MergeReport unite(int a, int b);

    int component_count() const { return components_; }
    int size() const { return static_cast<int>(parent_.size()); }

    const std::vector<int>& members(int root) const { return members_[static_cast<std::size_t>(root)]; }
    const std::vector<std::int64_t>& histogram(int root) const { return hist_[static_cast<std::size_t>(root)]; }
    bool has_labels() const { return !hist_.empty(); }

    std::vector<int> roots();

private:
    std::vector<int> parent_;
    std::vector<int> comp_size_;
    std::vector<std::vector<int>> members_;
    std::vector<std::vector<std::int64_t>> hist_;
    int components_ = 0;
};

}  // namespace metaclust
