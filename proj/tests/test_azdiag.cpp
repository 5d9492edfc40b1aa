#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "borfloer/azdiag.hpp"
#include "borfloer/errors.hpp"
#include "borfloer/strands.hpp"

using namespace bf;

namespace {

AlgebraElement sum_to_elements(const PointedMatchedCircle& z, const AzModel& m,
                               const GeneratorSum& gs)
{
    AlgebraElement e = zero_element(z);
    for (auto& g : gs) e.toggle(m.to_strand(g));
    return e;
}

} // namespace

TEST_CASE("torus AZ model: 16 generators, bijective with the strand basis")
{
    auto z = torus_circle();
    AzModel m = build_az(z);
    auto gens = m.generators();
    StrandBasis basis(z);
    REQUIRE(gens.size() == 16);
    std::set<StrandTerm> seen;
    for (auto& g : gens) {
        auto t = m.to_strand(g);
        CHECK(term_valid(z, t));
        CHECK(basis.index_of(t) >= 0);
        CHECK(seen.insert(t).second); // injective
        CHECK(m.from_strand(t) == g); // two-sided inverse
    }
    // size-1 generators: 8
    int size1 = 0;
    for (auto& g : gens)
        if (g.size() == 1) ++size1;
    CHECK(size1 == 8);
}

TEST_CASE("genus-0 AZ model has one empty generator and one region")
{
    auto z = genus0_circle();
    AzModel m = build_az(z);
    CHECK(m.generators().size() == 1);
    CHECK(m.regions().size() == 1);
    CHECK(m.regions()[0].basepoint);
}

TEST_CASE("torus AZ region census: basepoint class swallows the diagonal")
{
    auto z = torus_circle();
    AzModel m = build_az(z);
    int bp = 0;
    for (auto& r : m.regions())
        if (r.basepoint) {
            ++bp;
            CHECK(r.diag_faces.size() == 5);
            CHECK(r.cells.size() == 1); // the (0,0) cell
        }
    CHECK(bp == 1);
    CHECK(m.regions().size() == 10);
}

TEST_CASE("spec example: generator at (1,2) planar is s=1,t=3 and reads rho12")
{
    auto z = torus_circle();
    AzModel m = build_az(z);
    DiagramGenerator g;
    g.points = {{1, 3}};
    auto t = m.to_strand(g);
    REQUIRE(t.chords.size() == 1);
    CHECK(t.chords[0] == ReebChord{1, 3});
}

TEST_CASE("az differential: the crossing generator resolves")
{
    auto z = torus_circle();
    AzModel m = build_az(z);
    DiagramGenerator g;
    g.points = {{1, 4}, {2, 3}};
    auto d = m.differential(g);
    REQUIRE(d.size() == 1);
    auto t = m.to_strand(*d.begin());
    CHECK(t.chords == std::vector<ReebChord>{{1, 3}, {2, 4}});
    // empty generator has zero differential
    CHECK(m.differential(DiagramGenerator{}).empty());
}

TEST_CASE("model isomorphism: differential intertwines with the strand oracle, k <= 2")
{
    for (auto z : {torus_circle(), genus2_antipodal(), genus2_blockwise()}) {
        AzModel m = build_az(z);
        for (auto& g : m.generators()) {
            auto dm = sum_to_elements(z, m, m.differential(g));
            auto ds = differential_strands(element_of(z, m.to_strand(g)));
            CHECK(dm == ds);
        }
    }
}

TEST_CASE("model isomorphism: actions intertwine with multiplication, exhaustive at k = 1")
{
    auto z = torus_circle();
    AzModel m = build_az(z);
    StrandBasis basis(z);
    for (auto& a : basis.all())
        for (auto& g : m.generators()) {
            auto lhs = sum_to_elements(z, m, m.action_left(a, g));
            auto rhs = multiply_strands(element_of(z, a), element_of(z, m.to_strand(g)));
            CHECK(lhs == rhs);
            auto lhs2 = sum_to_elements(z, m, m.action_right(g, a));
            auto rhs2 = multiply_strands(element_of(z, m.to_strand(g)), element_of(z, a));
            CHECK(lhs2 == rhs2);
        }
}

TEST_CASE("spec example: rho1 acting on the rho2 generator gives the rho12 generator")
{
    auto z = torus_circle();
    AzModel m = build_az(z);
    StrandTerm rho1;
    rho1.chords = {{1, 2}};
    DiagramGenerator x;
    x.points = {{2, 3}};
    auto res = m.action_left(rho1, x);
    REQUIRE(res.size() == 1);
    CHECK(m.to_strand(*res.begin()).chords == std::vector<ReebChord>{{1, 3}});
}

TEST_CASE("idempotent action: i0 fixes generators whose left idempotent matches")
{
    auto z = torus_circle();
    AzModel m = build_az(z);
    StrandTerm i0; // horizontal on the pair of point 1
    i0.horizontals = {z.pair_of(1)};
    for (auto& g : m.generators()) {
        if (g.size() != 1) continue;
        auto res = m.action_left(i0, g);
        auto li = left_idem(z, m.to_strand(g));
        if (li == Idempotent{{z.pair_of(1)}}) {
            REQUIRE(res.size() == 1);
            CHECK(*res.begin() == g);
        } else {
            CHECK(res.empty());
        }
    }
}

TEST_CASE("bimodule compatibility on all torus basis triples")
{
    auto z = torus_circle();
    AzModel m = build_az(z);
    StrandBasis basis(z);
    for (auto& a : basis.all())
        for (auto& g : m.generators())
            for (auto& b : basis.all()) {
                GeneratorSum xr = m.action_right(g, b);
                GeneratorSum lhs;
                for (auto& y : xr)
                    for (auto& w : m.action_left(a, y)) {
                        auto it = lhs.find(w);
                        if (it == lhs.end())
                            lhs.insert(w);
                        else
                            lhs.erase(it);
                    }
                GeneratorSum xl = m.action_left(a, g);
                GeneratorSum rhs;
                for (auto& y : xl)
                    for (auto& w : m.action_right(y, b)) {
                        auto it = rhs.find(w);
                        if (it == rhs.end())
                            rhs.insert(w);
                        else
                            rhs.erase(it);
                    }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("model isomorphism at k = 2: randomized action checks against the oracle")
{
    for (auto z : {genus2_antipodal(), genus2_blockwise()}) {
        AzModel m = build_az(z);
        StrandBasis basis(z);
        auto gens = m.generators();
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<size_t> pick_a(0, basis.size() - 1);
        std::uniform_int_distribution<size_t> pick_g(0, gens.size() - 1);
        for (int trial = 0; trial < 6000; ++trial) {
            auto& a = basis.all()[pick_a(rng)];
            auto& g = gens[pick_g(rng)];
            auto lhs = sum_to_elements(z, m, m.action_left(a, g));
            auto rhs = multiply_strands(element_of(z, a), element_of(z, m.to_strand(g)));
            CHECK(lhs == rhs);
            auto lhs2 = sum_to_elements(z, m, m.action_right(g, a));
            auto rhs2 = multiply_strands(element_of(z, m.to_strand(g)), element_of(z, a));
            CHECK(lhs2 == rhs2);
        }
    }
}

TEST_CASE("az differential squares to zero on every generator, k <= 2")
{
    for (auto z : {torus_circle(), genus2_antipodal()}) {
        AzModel m = build_az(z);
        for (auto& g : m.generators()) {
            GeneratorSum dd;
            for (auto& y : m.differential(g))
                for (auto& w : m.differential(y)) {
                    auto it = dd.find(w);
                    if (it == dd.end())
                        dd.insert(w);
                    else
                        dd.erase(it);
                }
            CHECK(dd.empty());
        }
    }
}
