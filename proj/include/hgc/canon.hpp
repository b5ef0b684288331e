#ifndef HGC_CANON_HPP
#define HGC_CANON_HPP

#include <map>
#include <string>
#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

/// Canonical labeling of a graph. `key` is the graph6 encoding of the
/// canonically relabeled graph -- the lexicographically least graph6 line
/// over all relabelings -- so equal keys mean isomorphic graphs.
/// `relabeling[old] = new` maps the input onto the graph encoded by `key`.
struct CanonResult {
    std::string key;
    std::vector<int> relabeling;
};

CanonResult canonical_form(const Graph& g);

std::string canonical_key(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// A set of graphs keyed by canonical form: one representative per
/// isomorphism class, iterated in key order so output is deterministic.
class CanonicalSet {
public:
    /// Returns true when g's class was not present yet.
    bool insert(const Graph& g);

    bool contains(const Graph& g) const { return by_key_.count(canonical_key(g)) > 0; }

    std::size_t size() const { return by_key_.size(); }

    void merge(const CanonicalSet& other);

    /// Canonical representatives in key order.
    std::vector<Graph> graphs() const;

    const std::map<std::string, Graph>& by_key() const { return by_key_; }

private:
    std::map<std::string, Graph> by_key_;
};

}  // namespace hgc

#endif
