#ifndef HGC_CLASSES_HPP
#define HGC_CLASSES_HPP

#include <functional>
#include <string>
#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

/// Parameters of the (p,q)-split and (p,q)-edge-split families.
struct PQParams {
    int p = 0;
    int q = 0;
};

/// A named hereditary class: a membership predicate, plus the finite
/// forbidden-induced-subgraph list when one is known, plus whether the
/// class is closed under complementation.
struct HereditaryClass {
    std::string name;
    std::function<bool(const Graph&)> member;
    std::vector<Graph> forbidden;
    bool has_forbidden_list = false;
    bool complement_closed = false;
};

/// True iff some induced subgraph of g is isomorphic to h.
bool contains_induced(const Graph& g, const Graph& h);

bool is_split(const Graph& g);      // Hammer-Simeone degree-sequence test
bool is_threshold(const Graph& g);  // peel isolated/dominating vertices
bool is_cograph(const Graph& g);    // quartet scan for induced P4
bool is_chordal(const Graph& g);    // LexBFS + perfect elimination check

/// Some bipartition (V1,V2) with independence number of G[V1] at most p
/// and clique number of G[V2] at most q.
bool is_pq_split(const Graph& g, PQParams params);

/// Some bipartition with at most p non-edges inside V1 and at most q
/// edges inside V2.
bool is_pq_edge_split(const Graph& g, PQParams params);

HereditaryClass split_class();
HereditaryClass threshold_class();
HereditaryClass cograph_class();
HereditaryClass chordal_class();
HereditaryClass pq_split_class(PQParams params);
HereditaryClass pq_edge_split_class(PQParams params);

/// Class defined by an explicit finite forbidden list. The complement
/// closure flag is derived from the list itself.
HereditaryClass forbidden_list_class(std::string name, std::vector<Graph> list);

/// Resolves one of the textual identifiers: "split", "threshold",
/// "cograph", "chordal", "pq-split:p,q", "pq-edge-split:p,q".
HereditaryClass base_class(const std::string& id);

}  // namespace hgc

#endif
