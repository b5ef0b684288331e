#include "hgc/operators.hpp"

#include <map>
#include <tuple>

#include "hgc/canon.hpp"

namespace hgc {

bool edge_add_member(const Graph& g, const HereditaryClass& base, EditWitness* witness) {
    if (witness) *witness = {};
    if (base.member(g)) return true;
    for (auto [u, v] : g.nonedges())
        if (base.member(g.with_edge(u, v))) {
            if (witness) *witness = {u, v};
            return true;
        }
    return false;
}

bool edge_apex_member(const Graph& g, const HereditaryClass& base, EditWitness* witness) {
    if (witness) *witness = {};
    if (base.member(g)) return true;
    for (auto [u, v] : g.edges())
        if (base.member(g.without_edge(u, v))) {
            if (witness) *witness = {u, v};
            return true;
        }
    return false;
}

bool vertex_apex_member(const Graph& g, const HereditaryClass& base, EditWitness* witness) {
    if (witness) *witness = {};
    if (base.member(g)) return true;
    for (int v = 0; v < g.order(); ++v)
        if (base.member(g.without_vertex(v))) {
            if (witness) *witness = {v, -1};
            return true;
        }
    return false;
}

namespace {

// One search instance per top-level query. The memo is local to the call, so
// concurrent queries never share state and results cannot depend on it.
struct EditSearch {
    const HereditaryClass& base;
    // phase: 0 = additions allowed, 1 = edge deletions, 2 = vertex deletions
    std::map<std::tuple<int, std::string, int, int, int>, bool> memo;

    bool member(const Graph& g) { return base.member(g); }

    bool run(const Graph& g, int phase, int p, int q, int r) {
        // Exhausted budgets collapse into the next phase, so zero-edit states
        // skip the memo (and its canonicalization) entirely.
        if (phase == 0 && p == 0) phase = 1;
        if (phase == 1 && q == 0) phase = 2;
        if (phase == 2 && r == 0) return member(g);
        auto key = std::make_tuple(phase, canonical_key(g), p, q, r);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool result = dispatch(g, phase, p, q, r);
        memo.emplace(std::move(key), result);
        return result;
    }

    bool dispatch(const Graph& g, int phase, int p, int q, int r) {
        if (phase == 0) {
            if (run(g, 1, 0, q, r)) return true;
            for (auto [u, v] : g.nonedges())
                if (run(g.with_edge(u, v), 0, p - 1, q, r)) return true;
            return false;
        }
        if (phase == 1) {
            if (run(g, 2, 0, 0, r)) return true;
            for (auto [u, v] : g.edges())
                if (run(g.without_edge(u, v), 1, 0, q - 1, r)) return true;
            return false;
        }
        if (member(g)) return true;
        for (int v = 0; v < g.order(); ++v)
            if (run(g.without_vertex(v), 2, 0, 0, r - 1)) return true;
        return false;
    }
};

void check_budgets(const OperatorSpec& spec) {
    if (spec.adds < 0 || spec.edge_deletes < 0 || spec.vertex_deletes < 0)
        throw Error("operator budgets must be non-negative");
}

}  // namespace

std::string OperatorSpec::text() const {
    std::string out = base.name + "+add^" + std::to_string(adds) + "-edge^" +
                      std::to_string(edge_deletes) + "-vertex^" + std::to_string(vertex_deletes);
    if (union_mode) out += ":union";
    return out;
}

namespace {

// Pure single budgets reduce to the one-step operators; anything deeper goes
// through the memoized search.
bool pure_member(const Graph& g, const HereditaryClass& base, int phase, int budget) {
    if (budget == 0) return base.member(g);
    if (budget == 1) {
        if (phase == 0) return edge_add_member(g, base);
        if (phase == 1) return edge_apex_member(g, base);
        return vertex_apex_member(g, base);
    }
    EditSearch search{base, {}};
    return search.run(g, phase, phase == 0 ? budget : 0, phase == 1 ? budget : 0,
                      phase == 2 ? budget : 0);
}

}  // namespace

bool iterated_member(const Graph& g, const OperatorSpec& spec) {
    check_budgets(spec);
    if (spec.union_mode)
        return pure_member(g, spec.base, 0, spec.adds) ||
               pure_member(g, spec.base, 1, spec.edge_deletes) ||
               pure_member(g, spec.base, 2, spec.vertex_deletes);
    int nonzero = (spec.adds > 0) + (spec.edge_deletes > 0) + (spec.vertex_deletes > 0);
    if (nonzero == 0) return spec.base.member(g);
    if (nonzero == 1) {
        if (spec.adds > 0) return pure_member(g, spec.base, 0, spec.adds);
        if (spec.edge_deletes > 0) return pure_member(g, spec.base, 1, spec.edge_deletes);
        return pure_member(g, spec.base, 2, spec.vertex_deletes);
    }
    EditSearch search{spec.base, {}};
    return search.run(g, 0, spec.adds, spec.edge_deletes, spec.vertex_deletes);
}

namespace {

int parse_budget(const std::string& text, std::size_t from, std::size_t to,
                 const std::string& whole) {
    if (from >= to) throw Error("missing budget in class spec: " + whole);
    int value = 0;
    for (std::size_t i = from; i < to; ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw Error("bad budget in class spec: " + whole);
        value = value * 10 + (c - '0');
        if (value > 1000) throw Error("budget out of range in class spec: " + whole);
    }
    return value;
}

}  // namespace

OperatorSpec parse_class_spec(const std::string& text) {
    if (text.rfind("edge-add:", 0) == 0)
        return {base_class(text.substr(9)), 1, 0, 0, false};
    if (text.rfind("edge-apex:", 0) == 0)
        return {base_class(text.substr(10)), 0, 1, 0, false};
    if (text.rfind("vertex-apex:", 0) == 0)
        return {base_class(text.substr(12)), 0, 0, 1, false};

    auto plus = text.find("+add^");
    if (plus == std::string::npos) return {base_class(text), 0, 0, 0, false};

    std::string body = text.substr(plus + 5);
    bool union_mode = false;
    if (body.size() >= 6 && body.compare(body.size() - 6, 6, ":union") == 0) {
        union_mode = true;
        body.resize(body.size() - 6);
    }
    auto edge_at = body.find("-edge^");
    auto vertex_at = body.find("-vertex^");
    if (edge_at == std::string::npos || vertex_at == std::string::npos || vertex_at < edge_at)
        throw Error("bad class spec (want base+add^p-edge^q-vertex^r[:union]): " + text);
    return {base_class(text.substr(0, plus)),
            parse_budget(body, 0, edge_at, text),
            parse_budget(body, edge_at + 6, vertex_at, text),
            parse_budget(body, vertex_at + 8, body.size(), text),
            union_mode};
}

}  // namespace hgc
