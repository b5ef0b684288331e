#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgc/matroid.hpp"
#include "oracles.hpp"

using hgc::GFqMatroid;
using hgc::PGSpace;
using hgc::PointSet;

namespace {

std::vector<std::string> texts(const std::vector<GFqMatroid>& ms) {
    std::vector<std::string> out;
    for (const GFqMatroid& m : ms) out.push_back(hgc::matroid_to_text(m));
    return out;
}

GFqMatroid fano() { return hgc::make_matroid(2, 3, 0x7f); }

}  // namespace

TEST_CASE("projective spaces have the right point counts and order") {
    CHECK(hgc::pg_space(2, 1).point_count() == 1);
    CHECK(hgc::pg_space(2, 2).point_count() == 3);
    CHECK(hgc::pg_space(2, 3).point_count() == 7);
    CHECK(hgc::pg_space(2, 4).point_count() == 15);
    CHECK(hgc::pg_space(3, 1).point_count() == 1);
    CHECK(hgc::pg_space(3, 2).point_count() == 4);
    CHECK(hgc::pg_space(3, 3).point_count() == 13);

    // ascending base-q codes with coordinate 0 least significant:
    // over GF(2), index = code - 1, so e1, e2, e1+e2, e3, ...
    const PGSpace& sp = hgc::pg_space(2, 3);
    CHECK(sp.points[0] == std::array<int, 4>{1, 0, 0, 0});
    CHECK(sp.points[1] == std::array<int, 4>{0, 1, 0, 0});
    CHECK(sp.points[2] == std::array<int, 4>{1, 1, 0, 0});
    CHECK(sp.points[3] == std::array<int, 4>{0, 0, 1, 0});
    CHECK(sp.points[6] == std::array<int, 4>{1, 1, 1, 0});
    for (int i = 0; i < sp.point_count(); ++i)
        CHECK(sp.index_of(sp.points[static_cast<std::size_t>(i)]) == i);
    CHECK(sp.index_of({0, 0, 0, 0}) == -1);

    // first nonzero coordinate is normalized to 1 over GF(3)
    for (const auto& p : hgc::pg_space(3, 3).points) {
        int lead = 0;
        for (int c : p)
            if (c != 0) {
                lead = c;
                break;
            }
        CHECK(lead == 1);
    }
}

TEST_CASE("rank caps and validation") {
    CHECK(hgc::pg_rank_cap(2) == 4);
    CHECK(hgc::pg_rank_cap(3) == 3);
    CHECK_THROWS_AS(hgc::pg_rank_cap(4), hgc::Error);
    CHECK_THROWS_AS(hgc::pg_space(2, 5), hgc::Error);
    CHECK_THROWS_AS(hgc::pg_space(3, 4), hgc::Error);
    CHECK_THROWS_AS(hgc::pg_space(2, 0), hgc::Error);
}

TEST_CASE("rank and closure match the combination oracle on PG(2,2) and PG(2,3)") {
    for (int q : {2, 3}) {
        const PGSpace& sp = hgc::pg_space(q, 3);
        const PointSet all = (PointSet{1} << sp.point_count()) - 1;
        std::mt19937 rng(q);
        std::uniform_int_distribution<PointSet> pick(0, all);
        for (int trial = 0; trial < 300; ++trial) {
            PointSet s = pick(rng) & all;
            CHECK(hgc::pg_rank(sp, s) == oracle::rank(sp, s));
            CHECK(hgc::pg_closure(sp, s) == oracle::closure(sp, s));
        }
    }
}

TEST_CASE("closure properties on PG(3,2)") {
    const PGSpace& sp = hgc::pg_space(2, 4);
    std::mt19937 rng(99);
    std::uniform_int_distribution<PointSet> pick(0, (PointSet{1} << 15) - 1);
    for (int trial = 0; trial < 500; ++trial) {
        PointSet s = pick(rng);
        PointSet t = s | pick(rng);
        PointSet cs = hgc::pg_closure(sp, s);
        CHECK(hgc::pg_closure(sp, cs) == cs);               // idempotent
        CHECK((cs & s) == s);                               // extensive
        CHECK((hgc::pg_closure(sp, t) & cs) == cs);         // monotone
        // rank is submodular
        PointSet a = pick(rng), b = pick(rng);
        CHECK(hgc::pg_rank(sp, a | b) + hgc::pg_rank(sp, a & b) <=
              hgc::pg_rank(sp, a) + hgc::pg_rank(sp, b));
    }
}

TEST_CASE("make_matroid validates the presentation") {
    CHECK_NOTHROW(fano());
    CHECK(fano().size() == 7);
    CHECK_NOTHROW(hgc::make_matroid(2, 0, 0));  // the empty matroid
    CHECK_THROWS_AS(hgc::make_matroid(2, 0, 1), hgc::Error);
    CHECK_THROWS_AS(hgc::make_matroid(2, 3, 0b0111), hgc::Error);  // spans a line only
    CHECK_THROWS_AS(hgc::make_matroid(2, 2, 0b1000), hgc::Error);  // point out of range
    CHECK_THROWS_AS(hgc::make_matroid(5, 2, 0b11), hgc::Error);
    CHECK_THROWS_AS(hgc::make_matroid(2, 5, 0b11111), hgc::Error);
}

TEST_CASE("reembed rewrites over a basis of the span") {
    // full-rank subsets come back unchanged
    CHECK(hgc::reembed(2, 3, 0x7f) == fano());
    CHECK(hgc::reembed(2, 3, 0b1011) == hgc::make_matroid(2, 3, 0b1011));
    // a line of PG(3,2) lands on the whole of PG(1,2)
    const PGSpace& sp = hgc::pg_space(2, 4);
    PointSet line = hgc::pg_closure(sp, 0b11);
    CHECK(hgc::popcount(line) == 3);
    CHECK(hgc::reembed(2, 4, line) == hgc::make_matroid(2, 2, 0b111));
    // the empty subset is the empty matroid
    CHECK(hgc::reembed(2, 4, 0) == hgc::make_matroid(2, 0, 0));
    // rank is preserved
    std::mt19937 rng(5);
    std::uniform_int_distribution<PointSet> pick(0, (PointSet{1} << 15) - 1);
    for (int trial = 0; trial < 200; ++trial) {
        PointSet s = pick(rng);
        GFqMatroid m = hgc::reembed(2, 4, s);
        CHECK(m.r == hgc::pg_rank(sp, s));
        CHECK(m.size() == hgc::popcount(s));
    }
}

TEST_CASE("flats of the Fano plane and of a free basis") {
    // 1 empty + 7 points + 7 lines + 1 full
    std::vector<PointSet> ff = hgc::matroid_flats(fano());
    CHECK(ff.size() == 16);
    CHECK(ff.front() == 0);
    CHECK(ff.back() == 0x7f);
    int by_size[8] = {};
    for (PointSet f : ff) ++by_size[hgc::popcount(f)];
    CHECK(by_size[0] == 1);
    CHECK(by_size[1] == 7);
    CHECK(by_size[3] == 7);
    CHECK(by_size[7] == 1);

    // a basis induces the Boolean lattice
    GFqMatroid basis = hgc::make_matroid(2, 3, 0b1011);
    CHECK(hgc::matroid_flats(basis).size() == 8);

    hgc::FlatLattice lat = hgc::flat_lattice(basis);
    CHECK(lat.matroid == basis);
    CHECK(lat.flats == hgc::matroid_flats(basis));
}

TEST_CASE("flats match the closure oracle on random restrictions") {
    std::mt19937 rng(17);
    for (int q : {2, 3}) {
        const PGSpace& sp = hgc::pg_space(q, 3);
        const PointSet all = (PointSet{1} << sp.point_count()) - 1;
        std::uniform_int_distribution<PointSet> pick(0, all);
        int done = 0;
        while (done < 40) {
            PointSet ground = pick(rng) & all;
            if (hgc::pg_rank(sp, ground) != 3) continue;
            ++done;
            GFqMatroid m{q, 3, ground};
            std::vector<PointSet> got = hgc::matroid_flats(m);
            CHECK(got == oracle::flats(m));
        }
    }
}

TEST_CASE("non-element count") {
    CHECK(hgc::non_element_count(fano()) == 0);
    CHECK(hgc::non_element_count(hgc::make_matroid(2, 3, 0b1011)) == 4);
    CHECK(hgc::non_element_count(hgc::make_matroid(3, 2, 0b11)) == 2);
    CHECK(hgc::non_element_count(hgc::make_matroid(2, 0, 0)) == 0);
}

TEST_CASE("matroid classes") {
    hgc::MatroidClass all = hgc::matroid_class("all");
    hgc::MatroidClass free = hgc::matroid_class("free");
    hgc::MatroidClass no3 = hgc::matroid_class("no-3-line");
    hgc::MatroidClass rank2 = hgc::matroid_class("rank-le:2");

    GFqMatroid basis = hgc::make_matroid(2, 3, 0b1011);
    GFqMatroid line = hgc::make_matroid(2, 2, 0b111);

    CHECK(all.member(fano()));
    CHECK(free.member(basis));
    CHECK_FALSE(free.member(fano()));
    CHECK_FALSE(free.member(line));
    CHECK(no3.member(basis));
    CHECK_FALSE(no3.member(line));
    CHECK_FALSE(no3.member(fano()));
    CHECK(rank2.member(line));
    CHECK_FALSE(rank2.member(basis));

    // the 4-point line over GF(3) has no 3-point flat, so it is a member
    CHECK(no3.member(hgc::make_matroid(3, 2, 0b1111)));

    CHECK_THROWS_AS(hgc::matroid_class("nope"), hgc::Error);
    CHECK_THROWS_AS(hgc::matroid_class("rank-le:x"), hgc::Error);
    CHECK_THROWS_AS(hgc::matroid_class("free+bogus"), hgc::Error);
    CHECK_THROWS_AS(hgc::matroid_class(""), hgc::Error);
}

TEST_CASE("derived class identifiers match the explicit constructions") {
    GFqMatroid line = hgc::make_matroid(2, 2, 0b111);
    hgc::MatroidClass free = hgc::matroid_class("free");
    CHECK(hgc::matroid_class("free+add").member(line) ==
          hgc::matroid_add_class(free).member(line));
    CHECK(hgc::matroid_class("free+ext").member(line) ==
          hgc::matroid_extension_class(free).member(line));
    CHECK(hgc::matroid_class("free+union").member(line) ==
          hgc::matroid_union_class(free).member(line));
}

TEST_CASE("add and extension membership with witnesses") {
    hgc::MatroidClass no3 = hgc::matroid_class("no-3-line");
    GFqMatroid basis = hgc::make_matroid(2, 3, 0b1011);
    int w = -2;

    // member outright: witness resets to -1
    CHECK(hgc::matroid_add_member(basis, no3, &w));
    CHECK(w == -1);

    // the full line is not in no-3-line and additions only grow it
    GFqMatroid line = hgc::make_matroid(2, 2, 0b111);
    CHECK_FALSE(hgc::matroid_add_member(line, no3, &w));

    // deleting any point of the line leaves two points, which re-embed freely
    hgc::MatroidClass free = hgc::matroid_class("free");
    CHECK(hgc::matroid_extension_member(line, free, &w));
    CHECK(w >= 0);
    CHECK(((line.ground >> w) & 1) == 1);

    // union membership is the or of the two
    CHECK(hgc::matroid_union_member(line, free));
    CHECK_FALSE(hgc::matroid_union_member(fano(), free));
}

TEST_CASE("extension membership agrees with brute-force deletion") {
    hgc::MatroidClass no3 = hgc::matroid_class("no-3-line");
    const PGSpace& sp = hgc::pg_space(2, 3);
    for (PointSet ground = 1; ground <= 0x7f; ++ground) {
        if (hgc::pg_rank(sp, ground) != 3) continue;
        GFqMatroid m{2, 3, ground};
        bool direct = no3.member(m);
        for (PointSet bits = ground; bits != 0 && !direct; bits &= bits - 1) {
            PointSet rest = ground & ~(PointSet{1} << hgc::lowest_bit(bits));
            direct = no3.member(hgc::reembed(2, 3, rest));
        }
        CHECK(hgc::matroid_extension_member(m, no3) == direct);
    }
}

TEST_CASE("minimal forbidden flats, pinned lists") {
    CHECK(texts(hgc::enumerate_forbidden_flats(hgc::matroid_class("free"), 2, 3)) ==
          std::vector<std::string>{"2 2 : 0,1,2", "2 3 : 1,2,3,4"});
    CHECK(texts(hgc::enumerate_forbidden_flats(hgc::matroid_class("free"), 2, 4)) ==
          std::vector<std::string>{"2 2 : 0,1,2", "2 3 : 1,2,3,4", "2 4 : 2,3,5,7,8"});
    CHECK(texts(hgc::enumerate_forbidden_flats(hgc::matroid_class("free"), 3, 3)) ==
          std::vector<std::string>{"3 2 : 0,1,2", "3 2 : 0,1,2,3", "3 3 : 1,2,4,5"});
    CHECK(texts(hgc::enumerate_forbidden_flats(hgc::matroid_class("no-3-line"), 2, 4)) ==
          std::vector<std::string>{"2 2 : 0,1,2"});
    CHECK(texts(hgc::enumerate_forbidden_flats(hgc::matroid_class("no-3-line"), 3, 3)) ==
          std::vector<std::string>{"3 2 : 0,1,2"});
    CHECK(hgc::enumerate_forbidden_flats(hgc::matroid_class("all"), 2, 4).empty());
    CHECK(texts(hgc::enumerate_forbidden_flats(hgc::matroid_class("rank-le:1"), 2, 4)) ==
          std::vector<std::string>{"2 2 : 0,1", "2 2 : 0,1,2"});
    CHECK_THROWS_AS(hgc::enumerate_forbidden_flats(hgc::matroid_class("free"), 2, 5),
                    hgc::Error);
}

TEST_CASE("minimality predicate pins") {
    hgc::MatroidClass free = hgc::matroid_class("free");
    CHECK(hgc::is_minimal_forbidden_flat(hgc::make_matroid(2, 2, 0b111), free));
    // the Fano plane contains forbidden proper flats (its lines), so not minimal
    CHECK_FALSE(hgc::is_minimal_forbidden_flat(fano(), free));
    // members are never minimal non-members
    CHECK_FALSE(hgc::is_minimal_forbidden_flat(hgc::make_matroid(2, 3, 0b1011), free));
}

TEST_CASE("canonical ground is an orbit invariant") {
    // all 28 bases of the Fano plane collapse to one canonical ground
    const PGSpace& sp = hgc::pg_space(2, 3);
    std::set<PointSet> canon;
    int bases = 0;
    for (PointSet s = 0; s <= 0x7f; ++s) {
        if (hgc::popcount(s) != 3 || hgc::pg_rank(sp, s) != 3) continue;
        ++bases;
        canon.insert(hgc::canonical_ground(2, 3, s));
    }
    CHECK(bases == 28);
    CHECK(canon.size() == 1);
    // idempotent and never larger than the input mask
    for (PointSet s : {PointSet{0x7f}, PointSet{0b1011}, PointSet{0b0110}}) {
        PointSet c = hgc::canonical_ground(2, 3, s);
        CHECK(hgc::canonical_ground(2, 3, c) == c);
        CHECK(c <= s);
    }
}

TEST_CASE("rank bound formulas") {
    CHECK(hgc::matroid_add_rank_bound(2, 0, 2) == 4);
    CHECK(hgc::matroid_add_rank_bound(3, 3, 3) == 9);
    CHECK(hgc::matroid_add_rank_bound(2, 0, 3) == 6);  // 2s dominates
    auto free_flats = hgc::enumerate_forbidden_flats(hgc::matroid_class("free"), 2, 4);
    CHECK(hgc::matroid_add_rank_bound_for(free_flats) == 34);
    auto no3_flats = hgc::enumerate_forbidden_flats(hgc::matroid_class("no-3-line"), 2, 4);
    CHECK(hgc::matroid_add_rank_bound_for(no3_flats) == 4);
    CHECK_THROWS_AS(hgc::matroid_add_rank_bound_for({}), hgc::Error);
    CHECK(hgc::matroid_union_rank_bound(2, 3) == 5);
    CHECK_THROWS_AS(hgc::matroid_union_rank_bound(-1, 2), hgc::Error);
}

TEST_CASE("text form round trip and parse errors") {
    for (const char* text : {"2 3 : 0,1,2,3,4,5,6", "2 2 : 0,1,2", "3 3 : 1,2,4,5",
                             "2 0 :"}) {
        GFqMatroid m = hgc::matroid_from_text(text);
        CHECK(hgc::matroid_to_text(m) == text);
        CHECK(hgc::matroid_from_text(hgc::matroid_to_text(m)) == m);
    }
    CHECK(hgc::matroid_from_text("2 2 :  0 , 1 , 2") ==
          hgc::make_matroid(2, 2, 0b111));  // whitespace tolerated
    CHECK_THROWS_AS(hgc::matroid_from_text(""), hgc::Error);
    CHECK_THROWS_AS(hgc::matroid_from_text("2 2"), hgc::Error);
    CHECK_THROWS_AS(hgc::matroid_from_text("2 2 : 0,0,1"), hgc::Error);   // duplicate
    CHECK_THROWS_AS(hgc::matroid_from_text("2 2 : 0,zap"), hgc::Error);
    CHECK_THROWS_AS(hgc::matroid_from_text("2 2 : 0"), hgc::Error);       // rank 1 only
    CHECK_THROWS_AS(hgc::matroid_from_text("7 2 : 0,1"), hgc::Error);
    CHECK_THROWS_AS(hgc::matroid_from_text("2 2 : 0,1,99"), hgc::Error);
}

TEST_CASE("flat report artifacts") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hgc_test_flat_report";
    fs::remove_all(dir);

    auto flats = hgc::enumerate_forbidden_flats(hgc::matroid_class("no-3-line"), 2, 4);
    hgc::write_flat_report(flats, "no-3-line", 2, 4, 4, dir.string());

    std::ifstream list(dir / "forbidden_flats.txt");
    std::stringstream ls;
    ls << list.rdbuf();
    CHECK(ls.str() == ">> class=no-3-line q=2 r_max=4\n2 2 : 0,1,2\n");

    std::ifstream manifest(dir / "manifest.txt");
    std::stringstream ms;
    ms << manifest.rdbuf();
    CHECK(ms.str() == "class = no-3-line\n"
                      "q = 2\n"
                      "r_max = 4\n"
                      "total = 1\n"
                      "count_r2 = 1\n"
                      "bound = 4\n"
                      "tool_version = 0.1.0\n");
    fs::remove_all(dir);
}
