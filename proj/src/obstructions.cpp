#include "hgc/obstructions.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "hgc/canon.hpp"
#include "hgc/gen.hpp"
#include "hgc/graph6.hpp"

namespace hgc {

namespace {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    if (threads < 1) throw Error("thread count must be at least 1");
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> pool;
    int spawn = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

enum Status : unsigned char { kNeither = 0, kObstruction = 1, kViolation = 2 };

[[noreturn]] void heredity_abort(const Graph& g, const std::function<bool(const Graph&)>& member) {
    for (int v = 0; v < g.order(); ++v)
        if (!member(g.without_vertex(v)))
            throw Error("class predicate is not hereditary: " + canonical_key(g) +
                        " is a member but deleting vertex " + std::to_string(v) +
                        " leaves non-member " + canonical_key(g.without_vertex(v)));
    throw Error("class predicate is not hereditary: " + canonical_key(g));
}

}  // namespace

long long ObstructionReport::total() const {
    long long t = 0;
    for (const auto& [order, keys] : per_order) t += static_cast<long long>(keys.size());
    return t;
}

std::vector<std::string> ObstructionReport::all_keys() const {
    std::vector<std::string> out;
    for (const auto& [order, keys] : per_order) out.insert(out.end(), keys.begin(), keys.end());
    return out;
}

bool is_minimal_obstruction(const Graph& g, const std::function<bool(const Graph&)>& member) {
    if (member(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!member(g.without_vertex(v))) return false;
    return true;
}

bool edge_add_obstruction_direct(const Graph& g, const HereditaryClass& base) {
    if (base.member(g)) return false;
    for (auto [u, v] : g.nonedges())
        if (base.member(g.with_edge(u, v))) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!edge_add_member(g.without_vertex(v), base)) return false;
    return true;
}

ObstructionReport enumerate_obstructions(const OperatorSpec& spec, int n_max, int threads) {
    if (n_max < 1 || n_max > kMaxEnumOrder)
        throw Error("n_max must be between 1 and " + std::to_string(kMaxEnumOrder));
    auto member = [&spec](const Graph& g) { return iterated_member(g, spec); };

    ObstructionReport report;
    report.class_spec = spec.text();
    report.complete_through = n_max;
    report.bound = theorem_bound(spec);
    report.cycle_note = cycle_note_for(spec);

    // Membership of every isomorphism class of the previous order, keyed by
    // canonical graph6. Each scan only reads it, so no locking is needed.
    std::unordered_map<std::string, bool> prev;
    prev.emplace(graph6_encode(empty_graph(0)), member(empty_graph(0)));

    for (int n = 1; n <= n_max; ++n) {
        std::vector<Graph> graphs = enumerate_vector({n, {}}, threads);
        std::vector<unsigned char> status(graphs.size(), kNeither);
        std::vector<unsigned char> is_member(graphs.size(), 0);
        parallel_for(graphs.size(), threads, [&](std::size_t i) {
            const Graph& g = graphs[i];
            bool deletions_ok = true;
            for (int v = 0; v < n && deletions_ok; ++v)
                deletions_ok = prev.at(canonical_key(g.without_vertex(v)));
            bool in = member(g);
            is_member[i] = in ? 1 : 0;
            if (in && !deletions_ok)
                status[i] = kViolation;
            else if (!in && deletions_ok)
                status[i] = kObstruction;
        });
        std::vector<std::string> found;
        std::unordered_map<std::string, bool> cur;
        cur.reserve(graphs.size());
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (status[i] == kViolation) heredity_abort(graphs[i], member);
            std::string key = graph6_encode(graphs[i]);
            if (status[i] == kObstruction) found.push_back(key);
            cur.emplace(std::move(key), is_member[i] != 0);
        }
        if (!found.empty()) {
            std::sort(found.begin(), found.end());
            report.per_order.emplace(n, std::move(found));
        }
        prev = std::move(cur);
    }
    return report;
}

ObstructionReport obstructions_among(const OperatorSpec& spec, const std::vector<Graph>& graphs,
                                     int threads) {
    auto raw_member = [&spec](const Graph& g) { return iterated_member(g, spec); };

    std::unordered_map<std::string, bool> cache;
    std::mutex mu;
    auto member_by_key = [&](const std::string& key) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        bool in = raw_member(graph6_decode(key));
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(key, in);
        return in;
    };

    std::vector<std::string> keys(graphs.size());
    std::vector<unsigned char> status(graphs.size(), kNeither);
    parallel_for(graphs.size(), threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        keys[i] = canonical_key(g);
        bool in = member_by_key(keys[i]);
        bool deletions_ok = true;
        for (int v = 0; v < g.order() && deletions_ok; ++v)
            deletions_ok = member_by_key(canonical_key(g.without_vertex(v)));
        if (in && !deletions_ok)
            status[i] = kViolation;
        else if (!in && deletions_ok)
            status[i] = kObstruction;
    });

    ObstructionReport report;
    report.class_spec = spec.text();
    report.complete_through = 0;
    report.bound = theorem_bound(spec);
    report.cycle_note = cycle_note_for(spec);
    std::map<int, std::set<std::string>> buckets;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (status[i] == kViolation) heredity_abort(graphs[i], raw_member);
        if (status[i] == kObstruction) buckets[graphs[i].order()].insert(keys[i]);
    }
    for (auto& [order, set] : buckets)
        report.per_order.emplace(order, std::vector<std::string>(set.begin(), set.end()));
    return report;
}

bool duality_check(const HereditaryClass& base, int n_max, std::string* counterexample,
                   int threads) {
    if (!base.complement_closed)
        throw Error("duality check requires a complement-closed class: " + base.name);
    ObstructionReport add = enumerate_obstructions({base, 1, 0, 0, false}, n_max, threads);
    ObstructionReport apex = enumerate_obstructions({base, 0, 1, 0, false}, n_max, threads);

    std::set<std::string> add_keys, co_apex_keys;
    for (const auto& key : add.all_keys()) add_keys.insert(key);
    for (const auto& key : apex.all_keys())
        co_apex_keys.insert(canonical_key(graph6_decode(key).complement()));
    if (add_keys == co_apex_keys) return true;
    if (counterexample) {
        std::vector<std::string> diff;
        std::set_symmetric_difference(add_keys.begin(), add_keys.end(), co_apex_keys.begin(),
                                      co_apex_keys.end(), std::back_inserter(diff));
        *counterexample = diff.front();
    }
    return false;
}

long long edge_add_obstruction_bound(const std::vector<Graph>& base_list) {
    if (base_list.empty()) throw Error("bound needs a non-empty forbidden list");
    long long m = 0;
    for (const Graph& h : base_list) m = std::max<long long>(m, h.order());
    long long bound = 2 * m;
    for (const Graph& h : base_list) {
        long long c = h.order();
        long long k = static_cast<long long>(h.nonedges().size());
        bound = std::max(bound, c + k * (m - 2));
    }
    return bound;
}

long long vertex_apex_obstruction_bound(long long c) {
    if (c < 1) throw Error("bound needs c >= 1");
    return (c + 2) * (c + 2) / 4;
}

long long union_obstruction_bound(long long c, long long d) {
    if (c < 1 || d < 1) throw Error("bound needs c, d >= 1");
    return c + d;
}

std::optional<long long> theorem_bound(const OperatorSpec& spec) {
    const HereditaryClass& base = spec.base;
    if (!base.has_forbidden_list || base.forbidden.empty()) return std::nullopt;
    long long m = 0;
    for (const Graph& h : base.forbidden) m = std::max<long long>(m, h.order());
    if (m < 1) return std::nullopt;

    const int p = spec.adds, q = spec.edge_deletes, r = spec.vertex_deletes;
    auto add_bound = [&](int budget) -> std::optional<long long> {
        if (budget == 0) return m;
        if (budget == 1) return edge_add_obstruction_bound(base.forbidden);
        return std::nullopt;
    };
    auto apex_bound = [&](int budget) -> std::optional<long long> {
        if (budget == 0) return m;
        // Complements of the edge-add obstructions have the same orders.
        if (budget == 1 && base.complement_closed) return edge_add_obstruction_bound(base.forbidden);
        return std::nullopt;
    };
    auto vapex_bound = [&](int budget) {
        long long b = m;
        for (int i = 0; i < budget; ++i) b = vertex_apex_obstruction_bound(b);
        return b;
    };

    if (p == 0 && q == 0 && r == 0) return m;
    if (spec.union_mode) {
        std::vector<long long> parts;
        if (p > 0) {
            auto b = add_bound(p);
            if (!b) return std::nullopt;
            parts.push_back(*b);
        }
        if (q > 0) {
            auto b = apex_bound(q);
            if (!b) return std::nullopt;
            parts.push_back(*b);
        }
        if (r > 0) parts.push_back(vapex_bound(r));
        long long total = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i)
            total = union_obstruction_bound(total, parts[i]);
        return total;
    }
    if (q == 0 && r == 0) return add_bound(p);
    if (p == 0 && r == 0) return apex_bound(q);
    if (p == 0 && q == 0) return vapex_bound(r);
    return std::nullopt;
}

std::string cycle_note_for(const OperatorSpec& spec) {
    if (spec.base.name != "chordal" || spec.edge_deletes != 0 || spec.vertex_deletes != 0)
        return "";
    return "every cycle of length at least " + std::to_string(spec.adds + 4) +
           " is an obstruction";
}

bool check_bound_compliance(const ObstructionReport& report) {
    if (!report.bound) return true;
    for (const auto& [order, keys] : report.per_order)
        if (order > *report.bound) return false;
    return true;
}

void write_report(const ObstructionReport& report, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory " + dir + ": " + ec.message());

    for (const auto& [order, keys] : report.per_order) {
        std::vector<Graph> graphs;
        graphs.reserve(keys.size());
        for (const auto& key : keys) graphs.push_back(graph6_decode(key));
        std::string path = dir + "/obstructions_n" + std::to_string(order) + ".g6";
        write_graph6_file(path, graphs,
                          "class=" + report.class_spec + " order=" + std::to_string(order) +
                              " count=" + std::to_string(keys.size()));
    }

    std::ofstream out(dir + "/manifest.txt");
    if (!out) throw Error("cannot write manifest in " + dir);
    out << "class = " << report.class_spec << "\n";
    out << "complete_through = " << report.complete_through << "\n";
    out << "bound = ";
    if (report.bound)
        out << *report.bound << "\n";
    else
        out << "none\n";
    out << "total = " << report.total() << "\n";
    for (const auto& [order, keys] : report.per_order)
        out << "count_n" << order << " = " << keys.size() << "\n";
    if (!report.cycle_note.empty()) out << "cycle_note = " << report.cycle_note << "\n";
    out << "tool_version = " << kVersion << "\n";
    if (!out) throw Error("failed writing manifest in " + dir);
}

}  // namespace hgc
