#include "hgc/classes.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "hgc/canon.hpp"

namespace hgc {

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

long long edges_within(const Graph& g, VertexSet mask) {
    long long twice = 0;
    for (VertexSet s = mask; s != 0; s &= s - 1)
        twice += popcount(g.neighbors(lowest_bit(s)) & mask);
    return twice / 2;
}

bool has_clique_of_size(const Graph& g, VertexSet mask, int t) {
    if (t <= 0) return true;
    if (popcount(mask) < t) return false;
    int v = lowest_bit(mask);
    if (has_clique_of_size(g, mask & g.neighbors(v), t - 1)) return true;
    return has_clique_of_size(g, mask & ~bit(v), t);
}

bool has_stable_set_of_size(const Graph& g, VertexSet mask, int t) {
    if (t <= 0) return true;
    if (popcount(mask) < t) return false;
    int v = lowest_bit(mask);
    if (has_stable_set_of_size(g, mask & ~bit(v) & ~g.neighbors(v), t - 1)) return true;
    return has_stable_set_of_size(g, mask & ~bit(v), t);
}

void check_params(PQParams params) {
    if (params.p < 0 || params.q < 0) throw Error("p and q must be non-negative");
}

}  // namespace

bool contains_induced(const Graph& g, const Graph& h) {
    const int n = g.order(), k = h.order();
    if (k > n) return false;
    if (k == 0) return true;
    if (k == n) return is_isomorphic(g, h);

    const long long h_edges = h.edge_count();
    const std::vector<int> h_deg = sorted_degrees(h);
    const std::string h_key = canonical_key(h);

    // Gosper's hack over k-subsets of the n vertices.
    VertexSet subset = full_set(k);
    const VertexSet last = full_set(k) << (n - k);
    while (true) {
        Graph ind = g.induced(subset);
        if (ind.edge_count() == h_edges && sorted_degrees(ind) == h_deg &&
            canonical_key(ind) == h_key)
            return true;
        if (subset == last) return false;
        VertexSet c = subset & (~subset + 1);
        VertexSet r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
}

bool is_split(const Graph& g) {
    const int n = g.order();
    std::vector<int> d = sorted_degrees(g);
    std::reverse(d.begin(), d.end());
    int h = 0;
    while (h < n && d[static_cast<std::size_t>(h)] >= h) ++h;
    long long lhs = 0, rhs = static_cast<long long>(h) * (h - 1);
    for (int i = 0; i < h; ++i) lhs += d[static_cast<std::size_t>(i)];
    for (int i = h; i < n; ++i) rhs += d[static_cast<std::size_t>(i)];
    return lhs == rhs;
}

bool is_threshold(const Graph& g) {
    VertexSet alive = g.vertices();
    while (alive != 0) {
        int pick = -1;
        for (VertexSet s = alive; s != 0; s &= s - 1) {
            int v = lowest_bit(s);
            VertexSet nb = g.neighbors(v) & alive;
            if (nb == 0 || nb == (alive & ~bit(v))) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return false;
        alive &= ~bit(pick);
    }
    return true;
}

bool is_cograph(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    VertexSet quad = bit(a) | bit(b) | bit(c) | bit(d);
                    int deg[4];
                    int idx = 0;
                    long long twice = 0;
                    for (int v : {a, b, c, d}) {
                        deg[idx] = popcount(g.neighbors(v) & quad);
                        twice += deg[idx++];
                    }
                    if (twice != 6) continue;  // P4 has 3 edges
                    std::sort(deg, deg + 4);
                    if (deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2) return false;
                }
    return true;
}

bool is_chordal(const Graph& g) {
    const int n = g.order();
    if (n <= 2) return true;

    // Lexicographic BFS via partition refinement.
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < n; ++v) cells[0].push_back(v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!cells.empty()) {
        int v = cells[0].front();
        cells[0].erase(cells[0].begin());
        if (cells[0].empty()) cells.erase(cells.begin());
        order.push_back(v);
        std::vector<std::vector<int>> next;
        for (auto& cell : cells) {
            std::vector<int> in, out;
            for (int u : cell)
                (g.has_edge(u, v) ? in : out).push_back(u);
            if (!in.empty()) next.push_back(std::move(in));
            if (!out.empty()) next.push_back(std::move(out));
        }
        cells = std::move(next);
    }

    // Reversed LexBFS order is a perfect elimination ordering iff chordal.
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = n - 1 - i;
    for (int v = 0; v < n; ++v) {
        VertexSet later = 0;
        for (VertexSet s = g.neighbors(v); s != 0; s &= s - 1) {
            int u = lowest_bit(s);
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) later |= bit(u);
        }
        if (later == 0) continue;
        int first = -1, best = g.order() + 1;
        for (VertexSet s = later; s != 0; s &= s - 1) {
            int u = lowest_bit(s);
            if (pos[static_cast<std::size_t>(u)] < best) {
                best = pos[static_cast<std::size_t>(u)];
                first = u;
            }
        }
        if ((later & ~bit(first) & ~g.neighbors(first)) != 0) return false;
    }
    return true;
}

bool is_pq_split(const Graph& g, PQParams params) {
    check_params(params);
    const VertexSet all = g.vertices();
    VertexSet side = 0;
    while (true) {
        if (!has_stable_set_of_size(g, side, params.p + 1) &&
            !has_clique_of_size(g, all & ~side, params.q + 1))
            return true;
        if (side == all) return false;
        side = (side - all) & all;
    }
}

bool is_pq_edge_split(const Graph& g, PQParams params) {
    check_params(params);
    const VertexSet all = g.vertices();
    VertexSet side = 0;
    while (true) {
        long long k = popcount(side);
        if (k * (k - 1) / 2 - edges_within(g, side) <= params.p &&
            edges_within(g, all & ~side) <= params.q)
            return true;
        if (side == all) return false;
        side = (side - all) & all;
    }
}

HereditaryClass split_class() {
    Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
    return {"split", is_split, {two_k2, cycle_graph(4), cycle_graph(5)}, true, true};
}

HereditaryClass threshold_class() {
    Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
    return {"threshold", is_threshold, {two_k2, cycle_graph(4), path_graph(4)}, true, true};
}

HereditaryClass cograph_class() {
    return {"cograph", is_cograph, {path_graph(4)}, true, true};
}

HereditaryClass chordal_class() {
    return {"chordal", is_chordal, {}, false, false};
}

HereditaryClass pq_split_class(PQParams params) {
    check_params(params);
    std::string name = "pq-split:" + std::to_string(params.p) + "," + std::to_string(params.q);
    return {std::move(name), [params](const Graph& g) { return is_pq_split(g, params); },
            {}, false, false};
}

HereditaryClass pq_edge_split_class(PQParams params) {
    check_params(params);
    std::string name = "pq-edge-split:" + std::to_string(params.p) + "," + std::to_string(params.q);
    return {std::move(name), [params](const Graph& g) { return is_pq_edge_split(g, params); },
            {}, false, false};
}

HereditaryClass forbidden_list_class(std::string name, std::vector<Graph> list) {
    std::set<std::string> keys, co_keys;
    for (const Graph& h : list) {
        keys.insert(canonical_key(h));
        co_keys.insert(canonical_key(h.complement()));
    }
    bool closed = keys == co_keys;
    auto shared = std::make_shared<std::vector<Graph>>(list);
    auto member = [shared](const Graph& g) {
        for (const Graph& h : *shared)
            if (contains_induced(g, h)) return false;
        return true;
    };
    return {std::move(name), std::move(member), std::move(list), true, closed};
}

namespace {

PQParams parse_pq(const std::string& text, const std::string& id) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Error("expected p,q after ':' in class identifier: " + id);
    try {
        PQParams params{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
        check_params(params);
        return params;
    } catch (const std::logic_error&) {
        throw Error("bad p,q values in class identifier: " + id);
    }
}

}  // namespace

HereditaryClass base_class(const std::string& id) {
    if (id == "split") return split_class();
    if (id == "threshold") return threshold_class();
    if (id == "cograph") return cograph_class();
    if (id == "chordal") return chordal_class();
    if (id.rfind("pq-split:", 0) == 0) return pq_split_class(parse_pq(id.substr(9), id));
    if (id.rfind("pq-edge-split:", 0) == 0)
        return pq_edge_split_class(parse_pq(id.substr(14), id));
    throw Error("unknown class identifier: " + id);
}

}  // namespace hgc
