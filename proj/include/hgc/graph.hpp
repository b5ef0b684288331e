#ifndef HGC_GRAPH_HPP
#define HGC_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxVertices = 64;

/// Bitmask over vertex indices 0..63.
using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest_bit(VertexSet s) { return std::countr_zero(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline VertexSet full_set(int n) { return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Simple undirected graph on at most 64 vertices, one adjacency bitmask per
/// vertex. Immutable: all editing operations return a new graph.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n), 0) {}

    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }

    long long edge_count() const;

    bool has_edge(int u, int v) const {
        check_vertex(u, "has_edge");
        check_vertex(v, "has_edge");
        return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
    }

    VertexSet neighbors(int v) const {
        check_vertex(v, "neighbors");
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return popcount(neighbors(v)); }

    VertexSet vertices() const { return full_set(n_); }

    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::pair<int, int>> nonedges() const;

    Graph complement() const;

    /// Adds the non-edge (u,v). Rejects existing edges and loops.
    Graph with_edge(int u, int v) const;

    /// Deletes the edge (u,v). Rejects non-edges.
    Graph without_edge(int u, int v) const;

    /// Deletes vertex v; remaining vertices are reindexed preserving order.
    Graph without_vertex(int v) const;

    /// Induced subgraph on the vertices in `keep`, relabeled by increasing
    /// original index.
    Graph induced(VertexSet keep) const;

    /// Applies the permutation perm (perm[old] = new label).
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    static int check_order(int n) {
        if (n < 0 || n > kMaxVertices)
            throw Error("graph order " + std::to_string(n) + " outside [0, 64]");
        return n;
    }

    void check_vertex(int v, const char* op) const {
        if (v < 0 || v >= n_)
            throw Error(std::string(op) + ": vertex " + std::to_string(v) +
                        " out of range for order " + std::to_string(n_));
    }

    friend class GraphBuilder;
    void set_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
    void clear_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)] &= ~bit(v);
        adj_[static_cast<std::size_t>(v)] &= ~bit(u);
    }
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace hgc

#endif
