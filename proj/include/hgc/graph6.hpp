#ifndef HGC_GRAPH6_HPP
#define HGC_GRAPH6_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "hgc/graph.hpp"

namespace hgc {

/// Parse failure in a graph6 line; `offset` is the byte position of the
/// offending character.
class Graph6Error : public Error {
public:
    Graph6Error(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Encodes a graph as a graph6 line (no trailing newline). Upper-triangle
/// bits in column-major order, packed into 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 line. The input must be exactly one encoded graph:
/// malformed headers, bytes outside 63..126, truncation, and trailing
/// garbage are all rejected.
Graph graph6_decode(std::string_view line);

}  // namespace hgc

#endif
