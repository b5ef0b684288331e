#include "hgc/graph6.hpp"

namespace hgc {

namespace {

constexpr int kBias = 63;

void append_bits(std::string& out, const std::vector<bool>& bits) {
    int acc = 0, nbits = 0;
    for (bool b : bits) {
        acc = (acc << 1) | (b ? 1 : 0);
        if (++nbits == 6) {
            out.push_back(static_cast<char>(acc + kBias));
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits > 0) {
        acc <<= (6 - nbits);  // pad with zero bits
        out.push_back(static_cast<char>(acc + kBias));
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        // 18-bit header for 63 <= n <= 64 (the library's cap)
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

Graph graph6_decode(std::string_view line) {
    std::size_t pos = 0;
    auto need = [&](const char* what) -> int {
        if (pos >= line.size()) throw Graph6Error(std::string("truncated input, expected ") + what, pos);
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < kBias || c > 126)
            throw Graph6Error("byte outside printable graph6 range 63..126", pos);
        ++pos;
        return static_cast<int>(c) - kBias;
    };

    long long n;
    if (!line.empty() && static_cast<unsigned char>(line[0]) == 126) {
        ++pos;
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126)
            throw Graph6Error("8-byte order header not supported (order cap is 64)", pos);
        long long a = need("order header"), b = need("order header"), c = need("order header");
        n = (a << 12) | (b << 6) | c;
    } else {
        n = need("order header");
    }
    if (n > kMaxVertices)
        throw Graph6Error("graph order " + std::to_string(n) + " exceeds the 64-vertex cap", 0);

    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(nbytes) * 6);
    for (long long k = 0; k < nbytes; ++k) {
        int val = need("adjacency bits");
        for (int s = 5; s >= 0; --s) bits.push_back((val >> s) & 1);
    }
    if (pos != line.size()) throw Graph6Error("trailing garbage after encoded graph", pos);
    for (std::size_t k = static_cast<std::size_t>(nbits); k < bits.size(); ++k)
        if (bits[k]) throw Graph6Error("nonzero padding bits", line.size() - 1);

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits[k++]) edges.emplace_back(i, j);
    return Graph::build(static_cast<int>(n), edges);
}

}  // namespace hgc
