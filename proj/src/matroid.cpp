#include "hgc/matroid.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "hgc/gen.hpp"

namespace hgc {

namespace {

using Vec = std::array<int, 4>;

int field_inverse(int q, int c) { return (q == 3 && c == 2) ? 2 : 1; }

Vec normalized(int q, Vec v, int r) {
    for (int i = 0; i < r; ++i)
        if (v[static_cast<std::size_t>(i)] != 0) {
            int inv = field_inverse(q, v[static_cast<std::size_t>(i)]);
            for (int j = 0; j < r; ++j)
                v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] * inv % q;
            return v;
        }
    return v;
}

// Incremental row basis over GF(q), rows kept sorted by pivot position and
// reduced left of their pivot, which makes span tests a single sweep.
struct GFBasis {
    int q = 2;
    int r = 0;
    std::vector<std::pair<int, Vec>> rows;  // (pivot, row with leading 1)

    Vec reduce(Vec v) const {
        for (const auto& [piv, row] : rows) {
            int c = v[static_cast<std::size_t>(piv)];
            if (c == 0) continue;
            for (int j = 0; j < r; ++j)
                v[static_cast<std::size_t>(j)] =
                    (v[static_cast<std::size_t>(j)] + q * q -
                     c * row[static_cast<std::size_t>(j)] % q) %
                    q;
        }
        return v;
    }

    bool in_span(const Vec& v) const {
        Vec w = reduce(v);
        for (int j = 0; j < r; ++j)
            if (w[static_cast<std::size_t>(j)] != 0) return false;
        return true;
    }

    bool add(const Vec& v) {
        Vec w = reduce(v);
        int piv = -1;
        for (int j = 0; j < r && piv < 0; ++j)
            if (w[static_cast<std::size_t>(j)] != 0) piv = j;
        if (piv < 0) return false;
        int inv = field_inverse(q, w[static_cast<std::size_t>(piv)]);
        for (int j = 0; j < r; ++j)
            w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)] * inv % q;
        auto at = std::lower_bound(rows.begin(), rows.end(), piv,
                                   [](const auto& row, int p) { return row.first < p; });
        rows.insert(at, {piv, w});
        return true;
    }

    int rank() const { return static_cast<int>(rows.size()); }
};

struct SpaceData {
    PGSpace space;
    std::vector<std::pair<PointSet, int>> subspaces;  // mask, rank; ascending masks
    std::vector<std::array<std::uint8_t, 16>> perms;  // point action of every invertible map
};

void build_points(SpaceData& d) {
    const int q = d.space.q, r = d.space.r;
    long long total = 1;
    for (int i = 0; i < r; ++i) total *= q;
    for (long long code = 1; code < total; ++code) {
        Vec v{};
        long long rest = code;
        for (int i = 0; i < r; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<int>(rest % q);
            rest /= q;
        }
        if (normalized(q, v, r) == v) d.space.points.push_back(v);
    }
}

GFBasis basis_of(const PGSpace& space, PointSet s) {
    GFBasis basis{space.q, space.r, {}};
    for (PointSet bits = s; bits != 0; bits &= bits - 1)
        basis.add(space.points[static_cast<std::size_t>(lowest_bit(bits))]);
    return basis;
}

void build_subspaces(SpaceData& d) {
    const int n = d.space.point_count();
    std::set<PointSet> seen;
    // Every subspace is the closure of an independent set, so generating sets
    // of size up to r cover all of them.
    for (PointSet s = 0; s < (PointSet{1} << n); ++s) {
        if (popcount(s) > d.space.r) continue;
        seen.insert(pg_closure(d.space, s));
    }
    for (PointSet cl : seen) d.subspaces.emplace_back(cl, pg_rank(d.space, cl));
}

void build_group(SpaceData& d) {
    const int q = d.space.q, r = d.space.r, n = d.space.point_count();
    long long cells = 1;
    for (int i = 0; i < r * r; ++i) cells *= q;
    for (long long code = 0; code < cells; ++code) {
        std::array<Vec, 4> m{};
        long long rest = code;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<int>(rest % q);
                rest /= q;
            }
        GFBasis test{q, r, {}};
        bool invertible = true;
        for (int i = 0; i < r && invertible; ++i) invertible = test.add(m[static_cast<std::size_t>(i)]);
        if (!invertible) continue;
        std::array<std::uint8_t, 16> perm{};
        for (int i = 0; i < n; ++i) {
            const Vec& x = d.space.points[static_cast<std::size_t>(i)];
            Vec y{};
            for (int row = 0; row < r; ++row) {
                int acc = 0;
                for (int k = 0; k < r; ++k)
                    acc += m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] *
                           x[static_cast<std::size_t>(k)];
                y[static_cast<std::size_t>(row)] = acc % q;
            }
            perm[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(d.space.index_of(normalized(q, y, r)));
        }
        d.perms.push_back(perm);
    }
}

const SpaceData& space_data(int q, int r) {
    if (q != 2 && q != 3) throw Error("supported fields are GF(2) and GF(3)");
    if (r < 1 || r > pg_rank_cap(q))
        throw Error("rank for GF(" + std::to_string(q) + ") must be 1.." +
                    std::to_string(pg_rank_cap(q)));
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<SpaceData>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{q, r}];
    if (!slot) {
        slot = std::make_unique<SpaceData>();
        slot->space.q = q;
        slot->space.r = r;
        build_points(*slot);
        build_subspaces(*slot);
        build_group(*slot);
    }
    return *slot;
}

PointSet apply_perm(const std::array<std::uint8_t, 16>& perm, PointSet mask) {
    PointSet out = 0;
    for (PointSet bits = mask; bits != 0; bits &= bits - 1)
        out |= PointSet{1} << perm[static_cast<std::size_t>(lowest_bit(bits))];
    return out;
}

void check_ground_range(const PGSpace& space, PointSet ground) {
    if (space.point_count() < 32 && (ground >> space.point_count()) != 0)
        throw Error("point index out of range for PG of rank " + std::to_string(space.r));
}

}  // namespace

int PGSpace::index_of(const std::array<int, 4>& coords) const {
    for (int i = 0; i < point_count(); ++i)
        if (points[static_cast<std::size_t>(i)] == coords) return i;
    return -1;
}

int pg_rank_cap(int q) {
    if (q == 2) return 4;
    if (q == 3) return 3;
    throw Error("supported fields are GF(2) and GF(3)");
}

const PGSpace& pg_space(int q, int r) { return space_data(q, r).space; }

int pg_rank(const PGSpace& space, PointSet s) {
    check_ground_range(space, s);
    return basis_of(space, s).rank();
}

PointSet pg_closure(const PGSpace& space, PointSet s) {
    check_ground_range(space, s);
    GFBasis basis = basis_of(space, s);
    PointSet out = 0;
    for (int i = 0; i < space.point_count(); ++i)
        if (basis.in_span(space.points[static_cast<std::size_t>(i)])) out |= PointSet{1} << i;
    return out;
}

GFqMatroid make_matroid(int q, int r, PointSet ground) {
    if (r == 0) {
        if (q != 2 && q != 3) throw Error("supported fields are GF(2) and GF(3)");
        if (ground != 0) throw Error("rank-0 matroid must have empty ground set");
        return {q, 0, 0};
    }
    const PGSpace& space = pg_space(q, r);
    check_ground_range(space, ground);
    if (pg_rank(space, ground) != r)
        throw Error("ground set does not span the rank-" + std::to_string(r) + " space");
    return {q, r, ground};
}

GFqMatroid reembed(int q, int r, PointSet subset) {
    if (subset == 0) return make_matroid(q, 0, 0);
    const PGSpace& space = pg_space(q, r);
    check_ground_range(space, subset);

    GFBasis basis{q, r, {}};
    std::vector<Vec> chosen;
    for (PointSet bits = subset; bits != 0; bits &= bits - 1) {
        const Vec& v = space.points[static_cast<std::size_t>(lowest_bit(bits))];
        if (basis.add(v)) chosen.push_back(v);
    }
    const int rank = static_cast<int>(chosen.size());
    if (rank == r) return {q, r, subset};

    const PGSpace& target = pg_space(q, rank);
    PointSet ground = 0;
    for (int j = 0; j < target.point_count(); ++j) {
        const Vec& x = target.points[static_cast<std::size_t>(j)];
        Vec y{};
        for (int k = 0; k < rank; ++k)
            for (int row = 0; row < r; ++row)
                y[static_cast<std::size_t>(row)] =
                    (y[static_cast<std::size_t>(row)] +
                     x[static_cast<std::size_t>(k)] *
                         chosen[static_cast<std::size_t>(k)][static_cast<std::size_t>(row)]) %
                    q;
        int original = space.index_of(normalized(q, y, r));
        if (original >= 0 && (subset >> original & 1) != 0) ground |= PointSet{1} << j;
    }
    if (popcount(ground) != popcount(subset))
        throw Error("internal re-embedding mismatch");
    return {q, rank, ground};
}

std::vector<PointSet> matroid_flats(const GFqMatroid& m) {
    if (m.r == 0) return {0};
    const SpaceData& d = space_data(m.q, m.r);
    std::set<PointSet> traces;
    for (const auto& sub : d.subspaces) traces.insert(sub.first & m.ground);
    return {traces.begin(), traces.end()};
}

FlatLattice flat_lattice(const GFqMatroid& m) { return {m, matroid_flats(m)}; }

int non_element_count(const GFqMatroid& m) {
    if (m.r == 0) return 0;
    return pg_space(m.q, m.r).point_count() - m.size();
}

bool matroid_add_member(const GFqMatroid& m, const MatroidClass& base, int* witness) {
    if (witness) *witness = -1;
    if (base.member(m)) return true;
    if (m.r == 0) return false;
    const int n = pg_space(m.q, m.r).point_count();
    for (int i = 0; i < n; ++i) {
        if ((m.ground >> i & 1) != 0) continue;
        if (base.member({m.q, m.r, m.ground | (PointSet{1} << i)})) {
            if (witness) *witness = i;
            return true;
        }
    }
    return false;
}

bool matroid_extension_member(const GFqMatroid& m, const MatroidClass& base, int* witness) {
    if (witness) *witness = -1;
    if (base.member(m)) return true;
    for (PointSet bits = m.ground; bits != 0; bits &= bits - 1) {
        int i = lowest_bit(bits);
        if (base.member(reembed(m.q, m.r, m.ground & ~(PointSet{1} << i)))) {
            if (witness) *witness = i;
            return true;
        }
    }
    return false;
}

bool matroid_union_member(const GFqMatroid& m, const MatroidClass& base) {
    return matroid_add_member(m, base) || matroid_extension_member(m, base);
}

MatroidClass matroid_add_class(const MatroidClass& base) {
    return {base.name + "+add",
            [base](const GFqMatroid& m) { return matroid_add_member(m, base); }};
}

MatroidClass matroid_extension_class(const MatroidClass& base) {
    return {base.name + "+ext",
            [base](const GFqMatroid& m) { return matroid_extension_member(m, base); }};
}

MatroidClass matroid_union_class(const MatroidClass& base) {
    return {base.name + "+union",
            [base](const GFqMatroid& m) { return matroid_union_member(m, base); }};
}

MatroidClass matroid_class(const std::string& id) {
    auto plus = id.find('+');
    if (plus != std::string::npos) {
        MatroidClass base = matroid_class(id.substr(0, plus));
        std::string suffix = id.substr(plus + 1);
        if (suffix == "add") return matroid_add_class(base);
        if (suffix == "ext") return matroid_extension_class(base);
        if (suffix == "union") return matroid_union_class(base);
        throw Error("unknown matroid class suffix: +" + suffix);
    }
    if (id == "all") return {"all", [](const GFqMatroid&) { return true; }};
    if (id == "free")
        return {"free", [](const GFqMatroid& m) { return m.size() == m.r; }};
    if (id == "no-3-line")
        return {"no-3-line", [](const GFqMatroid& m) {
                    if (m.r == 0) return true;
                    for (const auto& [mask, rank] : space_data(m.q, m.r).subspaces)
                        if (rank == 2 && popcount(mask & m.ground) == 3) return false;
                    return true;
                }};
    if (id.rfind("rank-le:", 0) == 0) {
        int k = -1;
        try {
            k = std::stoi(id.substr(8));
        } catch (const std::logic_error&) {
            throw Error("bad rank limit in matroid class: " + id);
        }
        if (k < 0) throw Error("bad rank limit in matroid class: " + id);
        return {id, [k](const GFqMatroid& m) { return m.r <= k; }};
    }
    throw Error("unknown matroid class identifier: " + id);
}

bool is_minimal_forbidden_flat(const GFqMatroid& m, const MatroidClass& cls) {
    if (cls.member(m)) return false;
    for (PointSet flat : matroid_flats(m)) {
        if (flat == m.ground) continue;
        if (!cls.member(reembed(m.q, m.r, flat))) return false;
    }
    return true;
}

std::vector<GFqMatroid> enumerate_forbidden_flats(const MatroidClass& cls, int q, int r_max) {
    if (r_max < 1 || r_max > pg_rank_cap(q))
        throw Error("r_max for GF(" + std::to_string(q) + ") must be 1.." +
                    std::to_string(pg_rank_cap(q)));
    std::vector<GFqMatroid> out;
    for (int r = 1; r <= r_max; ++r) {
        const SpaceData& d = space_data(q, r);
        const int n = d.space.point_count();
        std::vector<bool> visited(std::size_t{1} << n, false);
        for (PointSet mask = 1; mask < (PointSet{1} << n); ++mask) {
            if (visited[mask]) continue;
            if (pg_rank(d.space, mask) != r) continue;
            for (const auto& perm : d.perms) visited[apply_perm(perm, mask)] = true;
            GFqMatroid m{q, r, mask};
            if (is_minimal_forbidden_flat(m, cls)) out.push_back(m);
        }
    }
    return out;
}

PointSet canonical_ground(int q, int r, PointSet ground) {
    const SpaceData& d = space_data(q, r);
    check_ground_range(d.space, ground);
    PointSet best = ground;
    for (const auto& perm : d.perms) best = std::min(best, apply_perm(perm, ground));
    return best;
}

long long matroid_add_rank_bound(long long r, long long k, long long s) {
    if (k < 0) throw Error("bound needs k >= 0");
    if (r > s) throw Error("bound needs r <= s");
    return std::max(2 * s, r + k * (s - 1));
}

long long matroid_add_rank_bound_for(const std::vector<GFqMatroid>& forbidden_flats) {
    if (forbidden_flats.empty()) throw Error("bound needs a non-empty forbidden-flat list");
    long long s = 0;
    for (const GFqMatroid& m : forbidden_flats) s = std::max<long long>(s, m.r);
    long long bound = 2 * s;
    for (const GFqMatroid& m : forbidden_flats)
        bound = std::max(bound, matroid_add_rank_bound(m.r, non_element_count(m), s));
    return bound;
}

long long matroid_union_rank_bound(long long c, long long d) {
    if (c < 0 || d < 0) throw Error("bound needs c, d >= 0");
    return c + d;
}

std::string matroid_to_text(const GFqMatroid& m) {
    std::string out = std::to_string(m.q) + " " + std::to_string(m.r) + " :";
    bool first = true;
    for (PointSet bits = m.ground; bits != 0; bits &= bits - 1) {
        out += first ? " " : ",";
        out += std::to_string(lowest_bit(bits));
        first = false;
    }
    return out;
}

GFqMatroid matroid_from_text(const std::string& text) {
    std::istringstream in(text);
    int q = 0, r = -1;
    std::string colon;
    if (!(in >> q >> r >> colon) || colon != ":")
        throw Error("bad matroid text (want \"q r : indices\"): " + text);
    PointSet ground = 0;
    std::string rest;
    std::getline(in, rest);
    std::istringstream items(rest);
    std::string item;
    while (std::getline(items, item, ',')) {
        std::size_t at = item.find_first_not_of(" \t");
        if (at == std::string::npos) continue;
        int idx = -1;
        try {
            std::size_t used = 0;
            idx = std::stoi(item.substr(at), &used);
            if (at + used != item.find_last_not_of(" \t") + 1) throw std::invalid_argument("");
        } catch (const std::logic_error&) {
            throw Error("bad point index '" + item + "' in matroid text: " + text);
        }
        if (idx < 0 || idx >= 31) throw Error("point index out of range in matroid text: " + text);
        if ((ground >> idx & 1) != 0)
            throw Error("duplicate point index in matroid text: " + text);
        ground |= PointSet{1} << idx;
    }
    return make_matroid(q, r, ground);
}

void write_flat_report(const std::vector<GFqMatroid>& flats, const std::string& class_name,
                       int q, int r_max, std::optional<long long> bound,
                       const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory " + dir + ": " + ec.message());

    std::ofstream list(dir + "/forbidden_flats.txt");
    if (!list) throw Error("cannot write forbidden_flats.txt in " + dir);
    list << ">> class=" << class_name << " q=" << q << " r_max=" << r_max << "\n";
    for (const GFqMatroid& m : flats) list << matroid_to_text(m) << "\n";
    if (!list) throw Error("failed writing forbidden_flats.txt in " + dir);

    std::map<int, int> per_rank;
    for (const GFqMatroid& m : flats) ++per_rank[m.r];
    std::ofstream out(dir + "/manifest.txt");
    if (!out) throw Error("cannot write manifest in " + dir);
    out << "class = " << class_name << "\n";
    out << "q = " << q << "\n";
    out << "r_max = " << r_max << "\n";
    out << "total = " << flats.size() << "\n";
    for (const auto& [r, count] : per_rank) out << "count_r" << r << " = " << count << "\n";
    out << "bound = ";
    if (bound)
        out << *bound << "\n";
    else
        out << "none\n";
    out << "tool_version = " << kVersion << "\n";
    if (!out) throw Error("failed writing manifest in " + dir);
}

}  // namespace hgc
