#include "hgc/gen.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "hgc/canon.hpp"
#include "hgc/graph6.hpp"

namespace hgc {

namespace {

void check_spec(const GenSpec& spec) {
    if (spec.order < 1 || spec.order > kMaxEnumOrder)
        throw Error("exhaustive generation supports orders 1.." + std::to_string(kMaxEnumOrder) +
                    " (got " + std::to_string(spec.order) +
                    "); ingest an external graph6 file for larger orders");
    if (spec.edge_range && spec.edge_range->first > spec.edge_range->second)
        throw Error("empty edge-count range");
    if (spec.edge_range && spec.edge_range->first < 0)
        throw Error("negative edge-count bound");
}

Graph extend(const Graph& parent, VertexSet nbrs) {
    const int n = parent.order();
    std::vector<std::pair<int, int>> edges = parent.edges();
    for (VertexSet s = nbrs; s != 0; s &= s - 1) edges.emplace_back(lowest_bit(s), n);
    return Graph::build(n + 1, edges);
}

// DFS over canonical representatives. `parent` must be canonically labeled
// and equal to the graph its key encodes.
void grow(const Graph& parent, const std::string& parent_key, const GenSpec& spec,
          const std::function<void(const Graph&)>& emit) {
    if (parent.order() == spec.order) {
        if (spec.edge_range) {
            long long m = parent.edge_count();
            if (m < spec.edge_range->first || m > spec.edge_range->second) return;
        }
        emit(parent);
        return;
    }
    std::set<std::string> seen;
    const VertexSet limit = VertexSet{1} << parent.order();
    for (VertexSet nbrs = 0; nbrs < limit; ++nbrs) {
        if (spec.edge_range && parent.edge_count() + popcount(nbrs) > spec.edge_range->second)
            continue;
        Graph child = extend(parent, nbrs);
        CanonResult c = canonical_form(child);
        if (!seen.insert(c.key).second) continue;
        Graph canon_child = child.relabeled(c.relabeling);
        if (canonical_key(canon_child.without_vertex(canon_child.order() - 1)) != parent_key)
            continue;
        grow(canon_child, c.key, spec, emit);
    }
}

}  // namespace

void enumerate_graphs(const GenSpec& spec, const std::function<void(const Graph&)>& emit) {
    check_spec(spec);
    Graph seed(1);
    grow(seed, canonical_key(seed), spec, emit);
}

namespace {

// Full-order runs repeat constantly (obstruction scans, duality checks), are
// deterministic, and are small through order 8, so keep those around.
std::mutex cache_mu;
std::map<int, std::vector<Graph>> full_order_cache;

}  // namespace

std::vector<Graph> enumerate_vector(const GenSpec& spec, int threads) {
    check_spec(spec);
    if (threads < 1) throw Error("thread count must be positive");

    const bool cacheable = !spec.edge_range && spec.order <= 8;
    if (cacheable) {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = full_order_cache.find(spec.order);
        if (it != full_order_cache.end()) return it->second;
    }

    std::vector<Graph> out;
    if (threads == 1 || spec.order <= 2) {
        enumerate_graphs(spec, [&](const Graph& g) { out.push_back(g); });
        if (cacheable) {
            std::lock_guard<std::mutex> lock(cache_mu);
            full_order_cache.emplace(spec.order, out);
        }
        return out;
    }

    // Shard by the representatives a few levels below the target.
    const int shard_order = std::max(1, spec.order - 2);
    GenSpec shard_spec{shard_order, std::nullopt};
    std::vector<Graph> roots;
    enumerate_graphs(shard_spec, [&](const Graph& g) { roots.push_back(g); });

    std::vector<std::vector<Graph>> buckets(roots.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= roots.size()) return;
            grow(roots[i], graph6_encode(roots[i]), spec,
                 [&](const Graph& g) { buckets[i].push_back(g); });
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& b : buckets)
        for (auto& g : b) out.push_back(std::move(g));
    if (cacheable) {
        std::lock_guard<std::mutex> lock(cache_mu);
        full_order_cache.emplace(spec.order, out);
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind(">>", 0) == 0) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const Error& e) {
            throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs,
                       const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    if (!comment.empty()) out << ">> " << comment << "\n";
    for (const Graph& g : graphs) out << graph6_encode(g) << "\n";
    if (!out) throw Error("write failed: " + path);
}

}  // namespace hgc
