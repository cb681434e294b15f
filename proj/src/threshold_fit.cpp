#include "metaclust/threshold_fit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "metaclust/disjoint_set.hpp"
#include "metaclust/graph_cluster.hpp"
#include "metaclust/metrics.hpp"

namespace metaclust {

namespace {

struct UnionEdge {
    double w;
    int graph;
    int u;
    int v;
};

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

ThresholdModel fit_single_linkage_threshold(const std::vector<GraphProblem>& problems) {
    if (problems.empty())
        throw std::invalid_argument("fit_single_linkage_threshold: no problems");

    const std::size_t num_graphs = problems.size();
    std::vector<DisjointSet> forests;
    std::vector<long long> agreement(num_graphs, 0);
    std::vector<long long> total_pairs(num_graphs, 0);
    std::vector<UnionEdge> edges;
    forests.reserve(num_graphs);

    for (std::size_t g = 0; g < num_graphs; ++g) {
        const auto& graph = problems[g].graph;
        const auto& truth = problems[g].truth;
        truth.validate();
        const std::vector<int> graph_ids =
            graph.vertex_ids.empty()
                ? default_point_ids(static_cast<std::size_t>(graph.vertex_count))
                : graph.vertex_ids;
        if (truth.point_ids != graph_ids)
            throw std::invalid_argument("truth does not partition the graph's vertices");

        forests.emplace_back(graph.vertex_count, truth.assignment, truth.num_clusters);
        const long long n = graph.vertex_count;
        total_pairs[g] = choose2(n);
        long long same_truth = 0;
        std::vector<long long> cluster_size(static_cast<std::size_t>(truth.num_clusters), 0);
        for (int a : truth.assignment) ++cluster_size[static_cast<std::size_t>(a)];
        for (long long s : cluster_size) same_truth += choose2(s);
        // All-singleton start: exactly the truth's "different" pairs agree.
        agreement[g] = total_pairs[g] - same_truth;

        for (const auto& e : graph.edges)
            edges.push_back({e.w, static_cast<int>(g), e.u, e.v});
    }

    std::sort(edges.begin(), edges.end(),
              [](const UnionEdge& a, const UnionEdge& b) { return a.w < b.w; });

    auto apply_edge = [&](const UnionEdge& e) {
        const MergeReport report = forests[static_cast<std::size_t>(e.graph)].unite(e.u, e.v);
        if (!report.merged) return;
        const long long cross =
            static_cast<long long>(report.size_a) * static_cast<long long>(report.size_b);
        agreement[static_cast<std::size_t>(e.graph)] += 2 * report.same_label_pairs - cross;
    };

    auto mean_loss = [&] {
        double total = 0.0;
        for (std::size_t g = 0; g < num_graphs; ++g) {
            if (total_pairs[g] == 0) continue;  // single-vertex graph, loss 0
            total += 1.0 - static_cast<double>(agreement[g]) / static_cast<double>(total_pairs[g]);
        }
        return total / static_cast<double>(num_graphs);
    };

    // Weight-zero edges are inside C_r for every r > 0.
    std::size_t next = 0;
    while (next < edges.size() && edges[next].w == 0.0) apply_edge(edges[next++]);

    ThresholdModel model;
    model.r = next < edges.size() ? edges[next].w / 2.0 : 1.0;
    model.empirical_mean_loss = mean_loss();
    model.candidate_count = 1;

    while (next < edges.size()) {
        const double w = edges[next].w;
        while (next < edges.size() && edges[next].w == w) apply_edge(edges[next++]);
        const double loss = mean_loss();
        ++model.candidate_count;
        if (loss < model.empirical_mean_loss) {
            model.empirical_mean_loss = loss;
            model.r = w;
        }
    }
    return model;
}

double threshold_mean_loss(const std::vector<GraphProblem>& problems, double r) {
    if (problems.empty()) throw std::invalid_argument("threshold_mean_loss: no problems");
    double total = 0.0;
    for (const auto& p : problems)
        total += clustering_loss(p.truth, single_linkage_threshold_cluster(p.graph, r, false));
    return total / static_cast<double>(problems.size());
}

std::vector<GraphProblem> to_graph_problems(const MetaRepository& repo) {
    repo.require_nonempty("to_graph_problems");
    std::vector<GraphProblem> out;
    out.reserve(repo.size());
    for (const auto& problem : repo.problems) {
        GraphProblem gp;
        gp.graph = problem.is_euclidean() ? euclidean_to_graph(problem.dataset())
                                          : problem.graph();
        gp.truth = problem.truth;
        out.push_back(std::move(gp));
    }
    return out;
}

}  // namespace metaclust
