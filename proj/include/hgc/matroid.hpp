#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

// Subset of the points of one projective space, as a bitmask over point
// indices in the deterministic pg_space order.
using PointSet = std::uint32_t;

// The points of the rank-r projective geometry over GF(q): all nonzero
// coordinate vectors with the first nonzero coordinate normalized to 1,
// listed in ascending base-q value with coordinate 0 least significant.
struct PGSpace {
    int q = 0;
    int r = 0;
    std::vector<std::array<int, 4>> points;

    int point_count() const { return static_cast<int>(points.size()); }
    // Index of a normalized coordinate vector, -1 if absent.
    int index_of(const std::array<int, 4>& coords) const;
};

// Supported ranks: 1..4 over GF(2), 1..3 over GF(3).
int pg_rank_cap(int q);

// Cached immutable space; raises Error for unsupported q or r over cap.
const PGSpace& pg_space(int q, int r);

int pg_rank(const PGSpace& space, PointSet s);
PointSet pg_closure(const PGSpace& space, PointSet s);

// A simple GF(q)-representable matroid presented as a full-rank restriction:
// ground is a subset of pg_space(q, r) whose span is the whole space. r = 0
// with empty ground is the empty matroid.
struct GFqMatroid {
    int q = 2;
    int r = 0;
    PointSet ground = 0;

    int size() const { return popcount(ground); }
    bool operator==(const GFqMatroid&) const = default;
};

// Validates the presentation (caps, point range, full rank).
GFqMatroid make_matroid(int q, int r, PointSet ground);

// Full-rank presentation of an arbitrary subset: coordinates are rewritten
// over a basis of the subset's span, landing in pg_space(q, rank).
GFqMatroid reembed(int q, int r, PointSet subset);

// All flats: subsets of ground equal to their own projective-closure trace.
// Sorted ascending as masks. The empty set and the ground set are flats.
std::vector<PointSet> matroid_flats(const GFqMatroid& m);

struct FlatLattice {
    GFqMatroid matroid;
    std::vector<PointSet> flats;
};
FlatLattice flat_lattice(const GFqMatroid& m);

int non_element_count(const GFqMatroid& m);

struct MatroidClass {
    std::string name;
    std::function<bool(const GFqMatroid&)> member;
};

// Base identifiers: "all" (every matroid), "free" (independent ground, no
// circuits), "no-3-line" (no flat that is a 3-point rank-2 line),
// "rank-le:k". A "+add", "+ext" or "+union" suffix derives the add class,
// the extension class, or their union.
MatroidClass matroid_class(const std::string& id);

MatroidClass matroid_add_class(const MatroidClass& base);
MatroidClass matroid_extension_class(const MatroidClass& base);
MatroidClass matroid_union_class(const MatroidClass& base);

// add: m is in base or adding one non-element point lands in base.
// extension: m is in base or deleting one ground element (re-embedded into
// the span of the remainder) lands in base. Witness receives the point index
// when the decision came from an edit, -1 when m is a member outright.
bool matroid_add_member(const GFqMatroid& m, const MatroidClass& base,
                        int* witness = nullptr);
bool matroid_extension_member(const GFqMatroid& m, const MatroidClass& base,
                              int* witness = nullptr);
bool matroid_union_member(const GFqMatroid& m, const MatroidClass& base);

// True iff m is outside the class and every proper flat, re-embedded, is
// inside. The class must be hereditary (closed under flats) for this to mean
// minimality.
bool is_minimal_forbidden_flat(const GFqMatroid& m, const MatroidClass& cls);

// Exhaustive search over full-rank ground sets of pg_space(q, r) for each
// r = 1..r_max, one representative per orbit of the invertible linear maps.
// Representatives are the orbit-minimal masks, listed ascending within each
// rank. Deterministic.
std::vector<GFqMatroid> enumerate_forbidden_flats(const MatroidClass& cls, int q,
                                                  int r_max);

// Orbit-minimal equivalent of ground under the invertible linear maps of the
// space.
PointSet canonical_ground(int q, int r, PointSet ground);

// Rank bound for forbidden flats of an add class: with s the maximum rank
// over the base class's forbidden flats, a forbidden flat of the add class
// has rank at most max{2s, r + k(s-1)} where r and k are the rank and
// non-element count of a base forbidden flat; the list version maximizes
// over the list. union rank bound: c + d.
long long matroid_add_rank_bound(long long r, long long k, long long s);
long long matroid_add_rank_bound_for(const std::vector<GFqMatroid>& forbidden_flats);
long long matroid_union_rank_bound(long long c, long long d);

// Text form "q r : comma-separated point indices", e.g. "2 3 : 0,1,2,6".
std::string matroid_to_text(const GFqMatroid& m);
GFqMatroid matroid_from_text(const std::string& text);

// Writes forbidden_flats.txt (one text form per line) and manifest.txt
// ("key = value" lines) into dir, created if needed.
void write_flat_report(const std::vector<GFqMatroid>& flats, const std::string& class_name,
                       int q, int r_max, std::optional<long long> bound,
                       const std::string& dir);

}  // namespace hgc
