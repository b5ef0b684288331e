#pragma once

#include <string>

#include "hgc/classes.hpp"
#include "hgc/graph.hpp"

namespace hgc {

// Witness for a single edit step. For edge edits both endpoints are set; a
// vertex witness uses u only. When membership holds with no edit at all
// (the graph is already in the base class) the witness is left as {-1, -1}.
struct EditWitness {
    int u = -1;
    int v = -1;
    bool used() const { return u >= 0; }
};

// True iff g is in the base class or some single non-edge addition lands in it.
bool edge_add_member(const Graph& g, const HereditaryClass& base,
                     EditWitness* witness = nullptr);

// True iff g is in the base class or some single edge deletion lands in it.
bool edge_apex_member(const Graph& g, const HereditaryClass& base,
                      EditWitness* witness = nullptr);

// True iff g is in the base class or some single vertex deletion lands in it.
// The base members themselves count, so this class contains the base class
// (including the 0-vertex graph).
bool vertex_apex_member(const Graph& g, const HereditaryClass& base,
                        EditWitness* witness = nullptr);

// A derived class built from a base class and edit budgets. In single mode a
// graph is a member when some sequence of at most `adds` non-edge additions,
// then at most `edge_deletes` edge deletions, then at most `vertex_deletes`
// vertex deletions lands in the base class. In union mode one pure budget must
// suffice on its own (the union of the three single-budget classes).
struct OperatorSpec {
    HereditaryClass base;
    int adds = 0;
    int edge_deletes = 0;
    int vertex_deletes = 0;
    bool union_mode = false;

    // Canonical text form: "base+add^p-edge^q-vertex^r" with ":union" appended
    // in union mode.
    std::string text() const;
};

bool iterated_member(const Graph& g, const OperatorSpec& spec);

// Parses a class specification. Accepts plain base identifiers ("split",
// "pq-split:1,1", ...), the canonical text form produced by
// OperatorSpec::text(), and the shortcuts "edge-add:<base>",
// "edge-apex:<base>", "vertex-apex:<base>".
OperatorSpec parse_class_spec(const std::string& text);

}  // namespace hgc
