#include "hgc.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "hgc/canon.hpp"
#include "hgc/classes.hpp"
#include "hgc/gen.hpp"
#include "hgc/graph.hpp"
#include "hgc/graph6.hpp"
#include "hgc/matroid.hpp"
#include "hgc/obstructions.hpp"
#include "hgc/operators.hpp"

struct hgc_graph {
    hgc::Graph g;
};
struct hgc_class {
    hgc::OperatorSpec spec;
};
struct hgc_report {
    hgc::ObstructionReport r;
};
struct hgc_matroid {
    hgc::GFqMatroid m;
};
struct hgc_mclass {
    hgc::MatroidClass c;
};
struct hgc_matroid_list {
    std::vector<hgc::GFqMatroid> v;
};

namespace {

thread_local std::string t_error;

void require(const void* ptr, const char* what) {
    if (ptr == nullptr) throw hgc::Error(std::string("null ") + what);
}

hgc_status fill(const std::string& s, char* buf, size_t cap) {
    require(buf, "output buffer");
    if (cap < s.size() + 1) {
        t_error = "buffer of " + std::to_string(cap) + " bytes too small, need " +
                  std::to_string(s.size() + 1);
        return HGC_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return HGC_OK;
}

template <typename F>
hgc_status wrap(F&& body) {
    try {
        return body();
    } catch (const hgc::Error& e) {
        t_error = e.what();
        return HGC_INVALID;
    } catch (const std::exception& e) {
        t_error = e.what();
        return HGC_INTERNAL;
    }
}

int sane_threads(int threads) {
    if (threads < 1 || threads > 256)
        throw hgc::Error("thread count " + std::to_string(threads) + " outside [1, 256]");
    return threads;
}

}  // namespace

extern "C" {

const char* hgc_version(void) { return hgc::kVersion; }

const char* hgc_last_error(void) { return t_error.c_str(); }

/* ---- graphs ---- */

hgc_status hgc_graph_decode(const char* graph6, hgc_graph** out) {
    return wrap([&] {
        require(graph6, "graph6 string");
        require(out, "out pointer");
        *out = new hgc_graph{hgc::graph6_decode(graph6)};
        return HGC_OK;
    });
}

hgc_status hgc_graph_build(int order, const int* endpoints, size_t edge_count,
                           hgc_graph** out) {
    return wrap([&] {
        require(out, "out pointer");
        if (edge_count > 0) require(endpoints, "endpoint array");
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new hgc_graph{hgc::Graph::build(order, edges)};
        return HGC_OK;
    });
}

void hgc_graph_free(hgc_graph* g) { delete g; }

int hgc_graph_order(const hgc_graph* g) { return g == nullptr ? -1 : g->g.order(); }

long long hgc_graph_edge_count(const hgc_graph* g) {
    return g == nullptr ? -1 : g->g.edge_count();
}

int hgc_graph_has_edge(const hgc_graph* g, int u, int v) {
    if (g == nullptr) return -1;
    try {
        return g->g.has_edge(u, v) ? 1 : 0;
    } catch (const hgc::Error& e) {
        t_error = e.what();
        return -1;
    }
}

hgc_status hgc_graph_encode(const hgc_graph* g, char* buf, size_t cap) {
    return wrap([&] {
        require(g, "graph");
        return fill(hgc::graph6_encode(g->g), buf, cap);
    });
}

hgc_status hgc_graph_canonical_key(const hgc_graph* g, char* buf, size_t cap) {
    return wrap([&] {
        require(g, "graph");
        return fill(hgc::canonical_key(g->g), buf, cap);
    });
}

hgc_status hgc_graph_complement(const hgc_graph* g, hgc_graph** out) {
    return wrap([&] {
        require(g, "graph");
        require(out, "out pointer");
        *out = new hgc_graph{g->g.complement()};
        return HGC_OK;
    });
}

hgc_status hgc_graph_isomorphic(const hgc_graph* a, const hgc_graph* b, int* out) {
    return wrap([&] {
        require(a, "graph");
        require(b, "graph");
        require(out, "out pointer");
        *out = hgc::is_isomorphic(a->g, b->g) ? 1 : 0;
        return HGC_OK;
    });
}

/* ---- classes ---- */

hgc_status hgc_class_parse(const char* spec, hgc_class** out) {
    return wrap([&] {
        require(spec, "class spec");
        require(out, "out pointer");
        *out = new hgc_class{hgc::parse_class_spec(spec)};
        return HGC_OK;
    });
}

void hgc_class_free(hgc_class* c) { delete c; }

hgc_status hgc_class_name(const hgc_class* c, char* buf, size_t cap) {
    return wrap([&] {
        require(c, "class");
        return fill(c->spec.text(), buf, cap);
    });
}

hgc_status hgc_class_member(const hgc_class* c, const hgc_graph* g, int* out) {
    return wrap([&] {
        require(c, "class");
        require(g, "graph");
        require(out, "out pointer");
        *out = hgc::iterated_member(g->g, c->spec) ? 1 : 0;
        return HGC_OK;
    });
}

hgc_status hgc_class_witness(const hgc_class* c, const hgc_graph* g, int* out_member,
                             int* out_u, int* out_v) {
    return wrap([&] {
        require(c, "class");
        require(g, "graph");
        require(out_member, "out pointer");
        require(out_u, "out pointer");
        require(out_v, "out pointer");
        const hgc::OperatorSpec& s = c->spec;
        const int total = s.adds + s.edge_deletes + s.vertex_deletes;
        if (total != 1)
            throw hgc::Error("witness is only defined for single-edit classes, not " +
                             s.text());
        hgc::EditWitness w;
        bool member = false;
        if (s.adds == 1)
            member = hgc::edge_add_member(g->g, s.base, &w);
        else if (s.edge_deletes == 1)
            member = hgc::edge_apex_member(g->g, s.base, &w);
        else
            member = hgc::vertex_apex_member(g->g, s.base, &w);
        *out_member = member ? 1 : 0;
        *out_u = w.u;
        *out_v = w.v;
        return HGC_OK;
    });
}

/* ---- generation ---- */

hgc_status hgc_enumerate_to_file(int order, const char* path, int threads,
                                 long long* out_count) {
    return wrap([&] {
        require(path, "path");
        std::vector<hgc::Graph> graphs =
            hgc::enumerate_vector({order, {}}, sane_threads(threads));
        const long long count = static_cast<long long>(graphs.size());
        hgc::write_graph6_file(path, graphs,
                               "order=" + std::to_string(order) +
                                   " count=" + std::to_string(count));
        if (out_count != nullptr) *out_count = count;
        return HGC_OK;
    });
}

/* ---- obstruction runs ---- */

hgc_status hgc_obstructions(const hgc_class* c, int n_max, int threads,
                            hgc_report** out) {
    return wrap([&] {
        require(c, "class");
        require(out, "out pointer");
        *out = new hgc_report{
            hgc::enumerate_obstructions(c->spec, n_max, sane_threads(threads))};
        return HGC_OK;
    });
}

hgc_status hgc_obstructions_from_file(const hgc_class* c, const char* graph6_path,
                                      int threads, hgc_report** out) {
    return wrap([&] {
        require(c, "class");
        require(graph6_path, "path");
        require(out, "out pointer");
        std::vector<hgc::Graph> graphs = hgc::read_graph6_file(graph6_path);
        *out = new hgc_report{
            hgc::obstructions_among(c->spec, graphs, sane_threads(threads))};
        return HGC_OK;
    });
}

void hgc_report_free(hgc_report* r) { delete r; }

long long hgc_report_total(const hgc_report* r) {
    return r == nullptr ? -1 : r->r.total();
}

int hgc_report_complete_through(const hgc_report* r) {
    return r == nullptr ? -1 : r->r.complete_through;
}

int hgc_report_has_bound(const hgc_report* r) {
    if (r == nullptr) return -1;
    return r->r.bound.has_value() ? 1 : 0;
}

long long hgc_report_bound(const hgc_report* r) {
    return r != nullptr && r->r.bound.has_value() ? *r->r.bound : -1;
}

hgc_status hgc_report_cycle_note(const hgc_report* r, char* buf, size_t cap) {
    return wrap([&] {
        require(r, "report");
        return fill(r->r.cycle_note, buf, cap);
    });
}

int hgc_report_order_count(const hgc_report* r, int order) {
    if (r == nullptr) return -1;
    auto it = r->r.per_order.find(order);
    return it == r->r.per_order.end() ? 0 : static_cast<int>(it->second.size());
}

hgc_status hgc_report_key(const hgc_report* r, int order, int index, char* buf,
                          size_t cap) {
    return wrap([&] {
        require(r, "report");
        auto it = r->r.per_order.find(order);
        if (it == r->r.per_order.end() || index < 0 ||
            index >= static_cast<int>(it->second.size()))
            throw hgc::Error("no obstruction at order " + std::to_string(order) +
                             " index " + std::to_string(index));
        return fill(it->second[static_cast<std::size_t>(index)], buf, cap);
    });
}

hgc_status hgc_report_bound_ok(const hgc_report* r, int* out) {
    return wrap([&] {
        require(r, "report");
        require(out, "out pointer");
        *out = hgc::check_bound_compliance(r->r) ? 1 : 0;
        return HGC_OK;
    });
}

hgc_status hgc_report_write(const hgc_report* r, const char* dir) {
    return wrap([&] {
        require(r, "report");
        require(dir, "directory");
        hgc::write_report(r->r, dir);
        return HGC_OK;
    });
}

hgc_status hgc_duality_check(const char* base_id, int n_max, int threads, int* out,
                             char* counterexample, size_t cap) {
    return wrap([&] {
        require(base_id, "base id");
        require(out, "out pointer");
        hgc::HereditaryClass base = hgc::base_class(base_id);
        std::string cex;
        const bool ok = hgc::duality_check(base, n_max, &cex, sane_threads(threads));
        *out = ok ? 1 : 0;
        if (counterexample != nullptr && cap > 0)
            return fill(ok ? std::string() : cex, counterexample, cap);
        return HGC_OK;
    });
}

/* ---- bound formulas ---- */

hgc_status hgc_edge_add_bound(const hgc_class* c, long long* out) {
    return wrap([&] {
        require(c, "class");
        require(out, "out pointer");
        if (!c->spec.base.has_forbidden_list)
            throw hgc::Error("base class " + c->spec.base.name +
                             " has no finite forbidden list");
        *out = hgc::edge_add_obstruction_bound(c->spec.base.forbidden);
        return HGC_OK;
    });
}

hgc_status hgc_vertex_apex_bound(long long base_bound, long long* out) {
    return wrap([&] {
        require(out, "out pointer");
        *out = hgc::vertex_apex_obstruction_bound(base_bound);
        return HGC_OK;
    });
}

hgc_status hgc_union_bound(long long c, long long d, long long* out) {
    return wrap([&] {
        require(out, "out pointer");
        *out = hgc::union_obstruction_bound(c, d);
        return HGC_OK;
    });
}

/* ---- matroids ---- */

int hgc_pg_rank_cap(int q) {
    try {
        return hgc::pg_rank_cap(q);
    } catch (const hgc::Error& e) {
        t_error = e.what();
        return -1;
    }
}

hgc_status hgc_matroid_parse(const char* text, hgc_matroid** out) {
    return wrap([&] {
        require(text, "matroid text");
        require(out, "out pointer");
        *out = new hgc_matroid{hgc::matroid_from_text(text)};
        return HGC_OK;
    });
}

void hgc_matroid_free(hgc_matroid* m) { delete m; }

hgc_status hgc_matroid_text(const hgc_matroid* m, char* buf, size_t cap) {
    return wrap([&] {
        require(m, "matroid");
        return fill(hgc::matroid_to_text(m->m), buf, cap);
    });
}

int hgc_matroid_rank(const hgc_matroid* m) { return m == nullptr ? -1 : m->m.r; }

int hgc_matroid_size(const hgc_matroid* m) { return m == nullptr ? -1 : m->m.size(); }

int hgc_matroid_non_elements(const hgc_matroid* m) {
    return m == nullptr ? -1 : hgc::non_element_count(m->m);
}

long long hgc_matroid_flat_count(const hgc_matroid* m) {
    if (m == nullptr) return -1;
    try {
        return static_cast<long long>(hgc::matroid_flats(m->m).size());
    } catch (const std::exception& e) {
        t_error = e.what();
        return -1;
    }
}

hgc_status hgc_mclass_parse(const char* id, hgc_mclass** out) {
    return wrap([&] {
        require(id, "class id");
        require(out, "out pointer");
        *out = new hgc_mclass{hgc::matroid_class(id)};
        return HGC_OK;
    });
}

void hgc_mclass_free(hgc_mclass* c) { delete c; }

hgc_status hgc_mclass_member(const hgc_mclass* c, const hgc_matroid* m, int* out) {
    return wrap([&] {
        require(c, "class");
        require(m, "matroid");
        require(out, "out pointer");
        *out = c->c.member(m->m) ? 1 : 0;
        return HGC_OK;
    });
}

hgc_status hgc_matroid_add_member(const hgc_matroid* m, const hgc_mclass* c,
                                  int* out_member, int* out_witness) {
    return wrap([&] {
        require(m, "matroid");
        require(c, "class");
        require(out_member, "out pointer");
        int w = -1;
        *out_member = hgc::matroid_add_member(m->m, c->c, &w) ? 1 : 0;
        if (out_witness != nullptr) *out_witness = w;
        return HGC_OK;
    });
}

hgc_status hgc_matroid_ext_member(const hgc_matroid* m, const hgc_mclass* c,
                                  int* out_member, int* out_witness) {
    return wrap([&] {
        require(m, "matroid");
        require(c, "class");
        require(out_member, "out pointer");
        int w = -1;
        *out_member = hgc::matroid_extension_member(m->m, c->c, &w) ? 1 : 0;
        if (out_witness != nullptr) *out_witness = w;
        return HGC_OK;
    });
}

hgc_status hgc_forbidden_flats(const hgc_mclass* c, int q, int r_max,
                               hgc_matroid_list** out) {
    return wrap([&] {
        require(c, "class");
        require(out, "out pointer");
        *out = new hgc_matroid_list{hgc::enumerate_forbidden_flats(c->c, q, r_max)};
        return HGC_OK;
    });
}

void hgc_matroid_list_free(hgc_matroid_list* l) { delete l; }

long long hgc_matroid_list_count(const hgc_matroid_list* l) {
    return l == nullptr ? -1 : static_cast<long long>(l->v.size());
}

hgc_status hgc_matroid_list_get(const hgc_matroid_list* l, long long index,
                                hgc_matroid** out) {
    return wrap([&] {
        require(l, "matroid list");
        require(out, "out pointer");
        if (index < 0 || index >= static_cast<long long>(l->v.size()))
            throw hgc::Error("matroid list index " + std::to_string(index) +
                             " out of range");
        *out = new hgc_matroid{l->v[static_cast<std::size_t>(index)]};
        return HGC_OK;
    });
}

hgc_status hgc_matroid_rank_bound(const hgc_matroid_list* forbidden_flats,
                                  long long* out) {
    return wrap([&] {
        require(forbidden_flats, "matroid list");
        require(out, "out pointer");
        *out = hgc::matroid_add_rank_bound_for(forbidden_flats->v);
        return HGC_OK;
    });
}

hgc_status hgc_flat_report_write(const hgc_matroid_list* l, const char* class_name,
                                 int q, int r_max, int has_bound, long long bound,
                                 const char* dir) {
    return wrap([&] {
        require(l, "matroid list");
        require(class_name, "class name");
        require(dir, "directory");
        std::optional<long long> b;
        if (has_bound != 0) b = bound;
        hgc::write_flat_report(l->v, class_name, q, r_max, b, dir);
        return HGC_OK;
    });
}

}  // extern "C"
