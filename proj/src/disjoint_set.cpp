#include "metaclust/disjoint_set.hpp"

#include <stdexcept>
#include <utility>

namespace metaclust {

DisjointSet::DisjointSet(int n, const std::vector<int>& labels, int num_labels) {
    if (n < 1) throw std::invalid_argument("disjoint set needs >= 1 element");
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("label vector length != element count");
    parent_.resize(static_cast<std::size_t>(n));
    comp_size_.assign(static_cast<std::size_t>(n), 1);
    members_.resize(static_cast<std::size_t>(n));
    components_ = n;
    for (int i = 0; i < n; ++i) {
        parent_[static_cast<std::size_t>(i)] = i;
        members_[static_cast<std::size_t>(i)] = {i};
    }
    if (!labels.empty()) {
        hist_.assign(static_cast<std::size_t>(n),
                     std::vector<std::int64_t>(static_cast<std::size_t>(num_labels), 0));
        for (int i = 0; i < n; ++i) {
            const int label = labels[static_cast<std::size_t>(i)];
            if (label < 0 || label >= num_labels)
                throw std::invalid_argument("label out of range");
            hist_[static_cast<std::size_t>(i)][static_cast<std::size_t>(label)] = 1;
        }
    }
}

int DisjointSet::find(int x) {
    if (x < 0 || x >= size()) throw std::invalid_argument("element out of range");
    int root = x;
    while (parent_[static_cast<std::size_t>(root)] != root)
        root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(x)] != root) {
        const int next = parent_[static_cast<std::size_t>(x)];
        parent_[static_cast<std::size_t>(x)] = root;
        x = next;
    }
    return root;
}

MergeReport DisjointSet::unite(int a, int b) {
    int ra = find(a);
    int rb = find(b);
    MergeReport report;
    if (ra == rb) return report;

    report.merged = true;
    report.size_a = comp_size_[static_cast<std::size_t>(ra)];
    report.size_b = comp_size_[static_cast<std::size_t>(rb)];
    if (!hist_.empty()) {
        const auto& ha = hist_[static_cast<std::size_t>(ra)];
        const auto& hb = hist_[static_cast<std::size_t>(rb)];
        std::int64_t same = 0;
        for (std::size_t l = 0; l < ha.size(); ++l) same += ha[l] * hb[l];
        report.same_label_pairs = same;
    }

    // Attach the smaller component under the larger one.
    if (comp_size_[static_cast<std::size_t>(ra)] < comp_size_[static_cast<std::size_t>(rb)])
        std::swap(ra, rb);
    parent_[static_cast<std::size_t>(rb)] = ra;
    comp_size_[static_cast<std::size_t>(ra)] += comp_size_[static_cast<std::size_t>(rb)];

    auto& big = members_[static_cast<std::size_t>(ra)];
    auto& small = members_[static_cast<std::size_t>(rb)];
    big.insert(big.end(), small.begin(), small.end());
    small.clear();
    small.shrink_to_fit();

    if (!hist_.empty()) {
        auto& hbig = hist_[static_cast<std::size_t>(ra)];
        auto& hsmall = hist_[static_cast<std::size_t>(rb)];
        for (std::size_t l = 0; l < hbig.size(); ++l) hbig[l] += hsmall[l];
        hsmall.clear();
        hsmall.shrink_to_fit();
    }

    --components_;
    return report;
}

std::vector<int> DisjointSet::roots() {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (find(i) == i) out.push_back(i);
    return out;
}

}  // namespace metaclust
