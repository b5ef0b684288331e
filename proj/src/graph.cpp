#include "hgc/graph.hpp"

#include <algorithm>

namespace hgc {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("build: edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw Error("build: loop (" + std::to_string(u) + "," + std::to_string(v) +
                        ") not allowed in a simple graph");
        g.set_edge(u, v);
    }
    return g;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (auto row : adj_) total += popcount(row);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(u)] & bit(v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> Graph::nonedges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!(adj_[static_cast<std::size_t>(u)] & bit(v))) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v)
        g.adj_[static_cast<std::size_t>(v)] =
            ~adj_[static_cast<std::size_t>(v)] & full_set(n_) & ~bit(v);
    return g;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u, "add-edge");
    check_vertex(v, "add-edge");
    if (u == v) throw Error("add-edge: loop rejected");
    if (has_edge(u, v)) throw Error("add-edge: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is already an edge");
    Graph g = *this;
    g.set_edge(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u, "delete-edge");
    check_vertex(v, "delete-edge");
    if (!has_edge(u, v)) throw Error("delete-edge: (" + std::to_string(u) + "," +
                                     std::to_string(v) + ") is not an edge");
    Graph g = *this;
    g.clear_edge(u, v);
    return g;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v, "delete-vertex");
    return induced(full_set(n_) & ~bit(v));
}

Graph Graph::induced(VertexSet keep) const {
    if ((keep & ~full_set(n_)) != 0)
        throw Error("induced: vertex set has bits outside [0, " + std::to_string(n_) + ")");
    std::vector<int> old_of;
    for (VertexSet s = keep; s != 0; s &= s - 1) old_of.push_back(lowest_bit(s));
    Graph g(static_cast<int>(old_of.size()));
    for (std::size_t i = 0; i < old_of.size(); ++i)
        for (std::size_t j = i + 1; j < old_of.size(); ++j)
            if (has_edge(old_of[i], old_of[j])) g.set_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw Error("relabeled: permutation length mismatch");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n_ || (seen & bit(p)))
            throw Error("relabeled: not a permutation of 0.." + std::to_string(n_ - 1));
        seen |= bit(p);
    }
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) g.set_edge(perm[static_cast<std::size_t>(u)],
                                           perm[static_cast<std::size_t>(v)]);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    return g.complement();
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::build(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph::build(n, edges);
}

}  // namespace hgc
