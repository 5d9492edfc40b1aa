#pragma once

// Shared type-D fixtures over the torus algebra, plus a randomized generator
// of structures that pass the compatibility equation.

#include <random>

#include "borfloer/dstruct.hpp"

namespace bf::fixtures {

inline StrandTerm chord(int s, int t)
{
    StrandTerm x;
    x.chords = {{s, t}};
    return x;
}

// single generator, idempotent = pair of point 1, delta = 0
inline TypeDStructure trivial_structure()
{
    auto z = torus_circle();
    Idempotent i0{{1}};
    return TypeDStructure(z, {{"x", i0}});
}

// delta(x) = rho12 (x) x
inline TypeDStructure loop_structure()
{
    auto z = torus_circle();
    TypeDStructure n(z, {{"x", Idempotent{{1}}}});
    n.add_delta("x", n.make_element({chord(1, 3)}), "x");
    return n;
}

// delta(x) = rho1 (x) y, delta(y) = rho2 (x) x: fails the equation with
// residual rho12 (x) x
inline TypeDStructure failing_structure()
{
    auto z = torus_circle();
    TypeDStructure n(z, {{"x", Idempotent{{1}}}, {"y", Idempotent{{2}}}});
    n.add_delta("x", n.make_element({chord(1, 2)}), "y");
    n.add_delta("y", n.make_element({chord(2, 3)}), "x");
    return n;
}

// delta(x) = rho123 (x) y, delta(y) = 0: bounded at i = 2
inline TypeDStructure bounded_structure()
{
    auto z = torus_circle();
    TypeDStructure n(z, {{"x", Idempotent{{1}}}, {"y", Idempotent{{2}}}});
    n.add_delta("x", n.make_element({chord(1, 4)}), "y");
    return n;
}

inline TypeDStructure random_valid_structure(std::mt19937_64& rng)
{
    auto z = torus_circle();
    auto zrev = z.reverse_orientation();
    StrandBasis basis(zrev);
    auto closed = [&](const StrandTerm& t) {
        return differential_strands(element_of(zrev, t)).is_zero();
    };
    for (int attempt = 0; attempt < 200; ++attempt) {
        int ng = 1 + (int)(rng() % 3);
        std::vector<TypeDGenerator> gens;
        for (int i = 0; i < ng; ++i) {
            Idempotent idem;
            for (int p = 1; p <= zrev.num_pairs(); ++p)
                if (rng() % 2) idem.pairs.insert(p);
            gens.push_back({"g" + std::to_string(i), idem});
        }
        TypeDStructure n(z, gens);
        int nentries = (int)(rng() % 3);
        bool ok = true;
        for (int e = 0; e < nentries && ok; ++e) {
            int u = (int)(rng() % ng), v = (int)(rng() % ng);
            std::vector<StrandTerm> candidates;
            for (auto& t : basis.all())
                if (left_idem(zrev, t) == n.generator(u).idem &&
                    right_idem(zrev, t) == n.generator(v).idem && closed(t))
                    candidates.push_back(t);
            if (candidates.empty()) continue;
            auto& t = candidates[rng() % candidates.size()];
            try {
                n.add_delta(u, n.make_element({t}), v);
            } catch (...) {
                ok = false;
            }
        }
        if (!ok) continue;
        if (!check_structure_equation(n)) return n;
    }
    return trivial_structure();
}

} // namespace bf::fixtures
