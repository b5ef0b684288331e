/* C interface to the hereditary-graph-class toolkit. All functions that can
 * fail return hgc_status; on failure hgc_last_error() describes the problem
 * for the calling thread. String outputs copy into caller buffers and fail
 * with HGC_BUFFER_TOO_SMALL when cap is insufficient (including the NUL).
 * Plain getters that take a handle directly return -1 on a null handle. */

#ifndef HGC_H
#define HGC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hgc_status {
    HGC_OK = 0,
    HGC_INVALID = 1,          /* bad arguments, parse or validation failure */
    HGC_BUFFER_TOO_SMALL = 2, /* output buffer cap insufficient */
    HGC_INTERNAL = 3
} hgc_status;

const char* hgc_version(void);
const char* hgc_last_error(void);

/* ---- graphs ---- */

typedef struct hgc_graph hgc_graph;

hgc_status hgc_graph_decode(const char* graph6, hgc_graph** out);
/* endpoints holds 2*edge_count vertex indices: u0, v0, u1, v1, ... */
hgc_status hgc_graph_build(int order, const int* endpoints, size_t edge_count,
                           hgc_graph** out);
void hgc_graph_free(hgc_graph* g);

int hgc_graph_order(const hgc_graph* g);
long long hgc_graph_edge_count(const hgc_graph* g);
int hgc_graph_has_edge(const hgc_graph* g, int u, int v);
hgc_status hgc_graph_encode(const hgc_graph* g, char* buf, size_t cap);
hgc_status hgc_graph_canonical_key(const hgc_graph* g, char* buf, size_t cap);
hgc_status hgc_graph_complement(const hgc_graph* g, hgc_graph** out);
hgc_status hgc_graph_isomorphic(const hgc_graph* a, const hgc_graph* b, int* out);

/* ---- classes (base identifiers, operator specs, shortcuts) ---- */

typedef struct hgc_class hgc_class;

hgc_status hgc_class_parse(const char* spec, hgc_class** out);
void hgc_class_free(hgc_class* c);
hgc_status hgc_class_name(const hgc_class* c, char* buf, size_t cap);
hgc_status hgc_class_member(const hgc_class* c, const hgc_graph* g, int* out);
/* Only for classes with exactly one edit in the budget. Edge witnesses set
 * *out_u and *out_v; a vertex witness sets *out_u and *out_v = -1; when the
 * graph is a member with no edit both are -1. */
hgc_status hgc_class_witness(const hgc_class* c, const hgc_graph* g, int* out_member,
                             int* out_u, int* out_v);

/* ---- exhaustive generation ---- */

hgc_status hgc_enumerate_to_file(int order, const char* path, int threads,
                                 long long* out_count);

/* ---- obstruction runs ---- */

typedef struct hgc_report hgc_report;

hgc_status hgc_obstructions(const hgc_class* c, int n_max, int threads,
                            hgc_report** out);
hgc_status hgc_obstructions_from_file(const hgc_class* c, const char* graph6_path,
                                      int threads, hgc_report** out);
void hgc_report_free(hgc_report* r);

long long hgc_report_total(const hgc_report* r);
int hgc_report_complete_through(const hgc_report* r);
int hgc_report_has_bound(const hgc_report* r);
long long hgc_report_bound(const hgc_report* r);
hgc_status hgc_report_cycle_note(const hgc_report* r, char* buf, size_t cap);
int hgc_report_order_count(const hgc_report* r, int order);
hgc_status hgc_report_key(const hgc_report* r, int order, int index, char* buf,
                          size_t cap);
hgc_status hgc_report_bound_ok(const hgc_report* r, int* out);
hgc_status hgc_report_write(const hgc_report* r, const char* dir);

/* base_id must name a complement-closed base class. *out is 1 when the
 * edge-apex obstructions are exactly the complements of the edge-add ones
 * through n_max; on 0 the counterexample key is copied when a buffer is
 * given (cap 0 skips it). */
hgc_status hgc_duality_check(const char* base_id, int n_max, int threads, int* out,
                             char* counterexample, size_t cap);

/* ---- bound formulas ---- */

/* Largest obstruction order the theorems allow for the edge-add class of the
 * base of c; HGC_INVALID when the base has no finite forbidden list. */
hgc_status hgc_edge_add_bound(const hgc_class* c, long long* out);
hgc_status hgc_vertex_apex_bound(long long base_bound, long long* out);
hgc_status hgc_union_bound(long long c, long long d, long long* out);

/* ---- matroids ---- */

typedef struct hgc_matroid hgc_matroid;
typedef struct hgc_mclass hgc_mclass;
typedef struct hgc_matroid_list hgc_matroid_list;

/* Largest supported rank over GF(q): 4 for q = 2, 3 for q = 3, -1 otherwise. */
int hgc_pg_rank_cap(int q);

hgc_status hgc_matroid_parse(const char* text, hgc_matroid** out);
void hgc_matroid_free(hgc_matroid* m);
hgc_status hgc_matroid_text(const hgc_matroid* m, char* buf, size_t cap);
int hgc_matroid_rank(const hgc_matroid* m);
int hgc_matroid_size(const hgc_matroid* m);
int hgc_matroid_non_elements(const hgc_matroid* m);
long long hgc_matroid_flat_count(const hgc_matroid* m);

hgc_status hgc_mclass_parse(const char* id, hgc_mclass** out);
void hgc_mclass_free(hgc_mclass* c);
hgc_status hgc_mclass_member(const hgc_mclass* c, const hgc_matroid* m, int* out);
/* Single-step operators applied on top of c. *out_witness is the acting
 * point index, or -1 when m is already a member of c. */
hgc_status hgc_matroid_add_member(const hgc_matroid* m, const hgc_mclass* c,
                                  int* out_member, int* out_witness);
hgc_status hgc_matroid_ext_member(const hgc_matroid* m, const hgc_mclass* c,
                                  int* out_member, int* out_witness);

hgc_status hgc_forbidden_flats(const hgc_mclass* c, int q, int r_max,
                               hgc_matroid_list** out);
void hgc_matroid_list_free(hgc_matroid_list* l);
long long hgc_matroid_list_count(const hgc_matroid_list* l);
hgc_status hgc_matroid_list_get(const hgc_matroid_list* l, long long index,
                                hgc_matroid** out);
hgc_status hgc_matroid_rank_bound(const hgc_matroid_list* forbidden_flats,
                                  long long* out);
hgc_status hgc_flat_report_write(const hgc_matroid_list* l, const char* class_name,
                                 int q, int r_max, int has_bound, long long bound,
                                 const char* dir);

#ifdef __cplusplus
}
#endif

#endif /* HGC_H */
