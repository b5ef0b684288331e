#ifndef HGC_GEN_HPP
#define HGC_GEN_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

inline constexpr int kMaxEnumOrder = 10;
inline constexpr const char* kVersion = "0.1.0";

/// Target of an exhaustive run: all graphs of the given order, optionally
/// restricted to an inclusive edge-count range.
struct GenSpec {
    int order = 1;
    std::optional<std::pair<long long, long long>> edge_range;
};

/// Streams exactly one canonically labeled representative of every
/// isomorphism class of the requested order, in a deterministic order.
/// Generation is by vertex augmentation: a child survives only when
/// deleting the last vertex of its canonical labeling recovers the parent
/// it was grown from, so no global dedup table is needed.
void enumerate_graphs(const GenSpec& spec, const std::function<void(const Graph&)>& emit);

/// Materialized variant. With threads > 1 the search is sharded by
/// ancestor graph and shard outputs are concatenated in shard order, so
/// the result equals the serial one.
std::vector<Graph> enumerate_vector(const GenSpec& spec, int threads = 1);

/// Reads a graph6 file in file order, no dedup. Lines starting with ">>"
/// and blank lines are skipped. Parse failures report the line number.
std::vector<Graph> read_graph6_file(const std::string& path);

/// Writes one graph per line; when `comment` is nonempty it is emitted
/// first as a ">> " line.
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs,
                       const std::string& comment = "");

}  // namespace hgc

#endif
