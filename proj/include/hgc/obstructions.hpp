#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgc/graph.hpp"
#include "hgc/operators.hpp"

namespace hgc {

// Result of an obstruction search. Keys are canonical graph6 strings, sorted
// and duplicate-free within each order; orders with no obstructions are
// absent from per_order. complete_through is the largest order searched
// exhaustively (0 when the candidates came from an external file, since then
// no completeness claim is possible).
struct ObstructionReport {
    std::string class_spec;
    int complete_through = 0;
    std::optional<long long> bound;
    std::string cycle_note;
    std::map<int, std::vector<std::string>> per_order;

    long long total() const;
    std::vector<std::string> all_keys() const;
};

// True iff g is outside the class and every one-vertex deletion is inside it.
// For hereditary classes this is exactly minimality of g as a forbidden
// induced subgraph.
bool is_minimal_obstruction(const Graph& g,
                            const std::function<bool(const Graph&)>& member);

// Direct acceptance test for minimal obstructions of the edge-add class of a
// base: g is outside the base, no single non-edge addition lands in the base,
// and every one-vertex deletion is an edge-add member. Agrees with
// is_minimal_obstruction over the edge-add membership predicate.
bool edge_add_obstruction_direct(const Graph& g, const HereditaryClass& base);

// Exhaustive isomorph-free search for minimal obstructions of the class given
// by spec, over all graphs with 1..n_max vertices. Every member graph that is
// encountered has its one-vertex deletions verified as members; a violation
// means the predicate is not hereditary and raises Error naming the witness.
ObstructionReport enumerate_obstructions(const OperatorSpec& spec, int n_max,
                                         int threads = 1);

// Filters an externally supplied candidate list instead of generating.
// Heredity of the predicate is checked on the members encountered, as above.
ObstructionReport obstructions_among(const OperatorSpec& spec,
                                     const std::vector<Graph>& graphs,
                                     int threads = 1);

// For a complement-closed base: checks that the obstructions of the edge-apex
// class are exactly the complements of the obstructions of the edge-add class
// through n_max. On failure, *counterexample (if given) receives a canonical
// key present on one side only. Raises Error for non-complement-closed bases.
bool duality_check(const HereditaryClass& base, int n_max,
                   std::string* counterexample = nullptr, int threads = 1);

// Bound theorems. edge_add_obstruction_bound: with m the largest order in the
// base's forbidden list, every minimal obstruction of the edge-add class has
// order at most max over list members H of max{2m, c + k(m-2)}, where c and k
// are the order and non-edge count of H. vertex_apex_obstruction_bound(c):
// if the base's obstructions have order at most c, the vertex-apex class's
// have order at most floor((c+2)^2/4). union_obstruction_bound: a union of
// classes with obstruction orders at most c and d has obstructions of order
// at most c+d.
long long edge_add_obstruction_bound(const std::vector<Graph>& base_list);
long long vertex_apex_obstruction_bound(long long c);
long long union_obstruction_bound(long long c, long long d);

// The a-priori order bound implied by the theorems above for the given class,
// when one applies.
std::optional<long long> theorem_bound(const OperatorSpec& spec);

// Symbolic description of the infinite part of the obstruction set, when the
// class has one (chordal base with pure addition budget). Empty otherwise.
std::string cycle_note_for(const OperatorSpec& spec);

// True iff every listed obstruction order respects the report's bound (and
// complete_through if a bound is present but exceeded by it, the check only
// concerns listed orders). Reports without a bound pass trivially.
bool check_bound_compliance(const ObstructionReport& report);

// Writes obstructions_n{k}.g6 per nonempty order plus manifest.txt into dir
// (created if needed). Manifest lines are "key = value".
void write_report(const ObstructionReport& report, const std::string& dir);

}  // namespace hgc
