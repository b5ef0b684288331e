#include "hgc/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>

#include "hgc/graph6.hpp"

namespace hgc {

namespace {

// Upper-triangle adjacency bits in graph6 (column-major) order, stored
// MSB-first so word-wise comparison is lexicographic bit comparison.
struct BitString {
    int nbits = 0;
    std::array<std::uint64_t, 32> words{};

    void push(bool b) {
        if (b) words[static_cast<std::size_t>(nbits) >> 6] |= std::uint64_t{1} << (63 - (nbits & 63));
        ++nbits;
    }

    // Compares the first k bits of both strings; both must have >= k bits.
    static int compare_prefix(const BitString& a, const BitString& b, int k) {
        int full = k >> 6;
        for (int w = 0; w < full; ++w) {
            if (a.words[static_cast<std::size_t>(w)] != b.words[static_cast<std::size_t>(w)])
                return a.words[static_cast<std::size_t>(w)] < b.words[static_cast<std::size_t>(w)] ? -1 : 1;
        }
        int rem = k & 63;
        if (rem == 0) return 0;
        std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
        std::uint64_t x = a.words[static_cast<std::size_t>(full)] & mask;
        std::uint64_t y = b.words[static_cast<std::size_t>(full)] & mask;
        if (x != y) return x < y ? -1 : 1;
        return 0;
    }
};

// Branch-and-bound for the lexicographically least upper-triangle bit string
// over all labelings. Positions are filled left to right; placing vertex v at
// position d appends its adjacency column against positions 0..d-1. Candidates
// are tried with the smallest column first, so the first leaf reached is the
// greedy labeling and later branches prune against it. A candidate is skipped
// when a sibling already tried is its twin (swapping the two is an
// automorphism, so the subtrees produce identical bit strings).
struct SearchState {
    const Graph& g;
    bool have_best = false;
    BitString best_bits;
    std::vector<int> best_lab;  // best_lab[new] = old
};

void search(SearchState& st, std::vector<int>& placed, const BitString& bits) {
    const int n = st.g.order();
    const int depth = static_cast<int>(placed.size());
    if (depth == n) {
        if (!st.have_best ||
            BitString::compare_prefix(bits, st.best_bits, bits.nbits) < 0) {
            st.have_best = true;
            st.best_bits = bits;
            st.best_lab = placed;
        }
        return;
    }

    VertexSet placed_mask = 0;
    for (int v : placed) placed_mask |= bit(v);

    // column bits against the placed prefix, most significant bit first
    std::vector<std::pair<std::uint64_t, int>> candidates;
    candidates.reserve(static_cast<std::size_t>(n - depth));
    for (int v = 0; v < n; ++v) {
        if ((placed_mask & bit(v)) != 0) continue;
        std::uint64_t column = 0;
        for (int i = 0; i < depth; ++i)
            column = (column << 1) | (st.g.has_edge(placed[i], v) ? 1u : 0u);
        candidates.emplace_back(column, v);
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> tried;
    for (const auto& [column, v] : candidates) {
        bool redundant = false;
        for (int u : tried)
            if ((st.g.neighbors(u) & ~bit(v)) == (st.g.neighbors(v) & ~bit(u))) {
                redundant = true;
                break;
            }
        if (redundant) continue;

        BitString next = bits;
        for (int i = depth - 1; i >= 0; --i) next.push(((column >> i) & 1) != 0);
        // Candidates are sorted by column, so once one exceeds the incumbent
        // prefix every later one does too.
        if (st.have_best &&
            BitString::compare_prefix(next, st.best_bits, next.nbits) > 0)
            break;
        tried.push_back(v);
        placed.push_back(v);
        search(st, placed, next);
        placed.pop_back();
    }
}

}  // namespace

CanonResult canonical_form(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {graph6_encode(g), {}};

    SearchState st{g, false, {}, {}};
    std::vector<int> placed;
    placed.reserve(static_cast<std::size_t>(n));
    search(st, placed, BitString{});

    std::vector<int> perm(static_cast<std::size_t>(n));  // perm[old] = new
    for (int pos = 0; pos < n; ++pos) perm[static_cast<std::size_t>(st.best_lab[static_cast<std::size_t>(pos)])] = pos;
    return {graph6_encode(g.relabeled(perm)), std::move(perm)};
}

std::string canonical_key(const Graph& g) { return canonical_form(g).key; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_key(a) == canonical_key(b);
}

bool CanonicalSet::insert(const Graph& g) {
    CanonResult c = canonical_form(g);
    auto [it, fresh] = by_key_.try_emplace(std::move(c.key), g.relabeled(c.relabeling));
    (void)it;
    return fresh;
}

void CanonicalSet::merge(const CanonicalSet& other) {
    for (const auto& [key, g] : other.by_key_) by_key_.try_emplace(key, g);
}

std::vector<Graph> CanonicalSet::graphs() const {
    std::vector<Graph> out;
    out.reserve(by_key_.size());
    for (const auto& [key, g] : by_key_) out.push_back(g);
    return out;
}

}  // namespace hgc
