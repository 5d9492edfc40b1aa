#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "borfloer/errors.hpp"
#include "borfloer/pmc.hpp"

using namespace bf;

TEST_CASE("torus circle validates with genus 1")
{
    auto z = torus_circle();
    CHECK(z.points() == 4);
    CHECK(z.genus() == 1);
    CHECK(z.pair_of(1) == z.pair_of(3));
    CHECK(z.pair_of(2) == z.pair_of(4));
    CHECK(z.partner(1) == 3);
}

TEST_CASE("empty circle validates with genus 0")
{
    auto z = genus0_circle();
    CHECK(z.points() == 0);
    CHECK(z.genus() == 0);
    CHECK(z.reeb_chords().empty());
}

TEST_CASE("[A,A,B,B] is rejected as SurgeryDisconnected")
{
    CHECK(surgery_circle_count(4, {1, 1, 2, 2}) > 1);
    CHECK(surgery_circle_count_bruteforce(4, {1, 1, 2, 2}) > 1);
    CHECK_THROWS_WITH_AS(PointedMatchedCircle::validate(4, {1, 1, 2, 2}),
                         doctest::Contains("SurgeryDisconnected"), error);
}

TEST_CASE("validation errors")
{
    CHECK_THROWS_AS(PointedMatchedCircle::validate(6, {1, 2, 3, 1, 2, 3}), error);
    CHECK_THROWS_AS(PointedMatchedCircle::validate(4, {1, 1, 1, 2}), error);
    CHECK_THROWS_AS(PointedMatchedCircle::validate(4, {1, 2, 1}), error);
}

TEST_CASE("genus computation")
{
    CHECK(genus2_antipodal().genus() == 2);
    CHECK(genus2_blockwise().genus() == 2);
}

TEST_CASE("reeb chords of torus are the six lexicographic chords")
{
    auto z = torus_circle();
    auto ch = z.reeb_chords();
    REQUIRE(ch.size() == 6);
    CHECK(ch[0] == ReebChord{1, 2});
    CHECK(ch[1] == ReebChord{1, 3});
    CHECK(ch[2] == ReebChord{1, 4});
    CHECK(ch[3] == ReebChord{2, 3});
    CHECK(ch[4] == ReebChord{2, 4});
    CHECK(ch[5] == ReebChord{3, 4});
    CHECK(genus2_antipodal().reeb_chords().size() == 28);
}

TEST_CASE("reverse orientation is an involution preserving validity")
{
    for (auto z : {torus_circle(), genus2_antipodal(), genus2_blockwise()}) {
        auto r = z.reverse_orientation();
        CHECK(r.genus() == z.genus());
        auto rr = r.reverse_orientation();
        CHECK(rr.matching() == z.matching());
    }
    // torus is reversal-symmetric up to pair relabeling
    auto z = torus_circle();
    CHECK(z.reverse_orientation().matching() == z.matching());
}

TEST_CASE("reversal transports chords by i -> n+1-i")
{
    // [1,2] on n=4 lands on [3,4]
    ReebChord c{1, 2};
    int n = 4;
    ReebChord r{n + 1 - c.end, n + 1 - c.start};
    CHECK(r == ReebChord{3, 4});
}

TEST_CASE("traversal agrees with brute-force components for all matchings, n <= 8")
{
    for (int n : {0, 2, 4, 6, 8}) {
        std::vector<int> matching(n, 0);
        std::function<bool(int, int)> gen = [&](int next_id, int filled) -> bool {
            if (filled == n)
                return surgery_circle_count(n, matching) ==
                       surgery_circle_count_bruteforce(n, matching);
            int p = 0;
            while (matching[p] != 0) ++p;
            matching[p] = next_id;
            bool ok = true;
            for (int q = p + 1; q < n && ok; ++q) {
                if (matching[q] != 0) continue;
                matching[q] = next_id;
                ok = gen(next_id + 1, filled + 2);
                matching[q] = 0;
            }
            matching[p] = 0;
            return ok;
        };
        CHECK(gen(1, 0));
    }
}
