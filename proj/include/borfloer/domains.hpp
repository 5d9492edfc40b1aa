#pragma once

// Domain enumeration and Euler-measure/index arithmetic on an AT model.  A
// domain is an integer multiplicity per region; at every strand crossing the
// alternating sum of the four sector multiplicities (60-degree sectors
// positive) must vanish, except at the three prescribed corners of a triangle
// pattern where it must be +1 (the cyclic ordering gamma-delta, delta-epsilon,
// gamma-epsilon).  The basepoint region is excluded.

#include <optional>

#include "borfloer/atdiag.hpp"

namespace bf {

struct DomainModelRegion {
    int euler_twelfths = 0;    // corner-sum Euler measure, in units of 1/12
    int boundary_twelfths = 0; // the part contributed by free-boundary corners
    bool basepoint = false;
    bool boundary_adjacent = false;
};

struct DomainModelVertex {
    std::array<int, 4> region{};
    std::array<int, 4> sign{}; // +1 on 60-degree sectors, -1 on 120
    Family fam_a = Family::gamma, fam_b = Family::delta;
};

struct DomainModel {
    std::vector<DomainModelRegion> regions;
    std::vector<DomainModelVertex> vertices;
    int genus = 0;
};

DomainModel domain_model(const AtModel& m);

struct CornerPattern {
    int gd = -1, de = -1, ge = -1; // vertex indices into DomainModel::vertices
    friend bool operator==(const CornerPattern&, const CornerPattern&) = default;
    friend auto operator<=>(const CornerPattern&, const CornerPattern&) = default;
};

struct Domain {
    std::vector<int> multiplicities;
    CornerPattern pattern;
    friend bool operator==(const Domain&, const Domain&) = default;
    friend auto operator<=>(const Domain&, const Domain&) = default;
};

// Sum of region measures; error basepoint_region_touched if the excluded
// region carries multiplicity.
Rat euler_measure(const DomainModel& m, const Domain& d);
// the same sum with free-boundary corner contributions dropped
Rat euler_measure_interior_corners_only(const DomainModel& m, const Domain& d);

int boundary_weight(const DomainModel& m, const Domain& d);

// ((3-n)/2) g - chi(S) + 2 e(B) + m
Rat polygon_index(int g, int n, const Rat& chi_s, const Rat& e_b, int m);

// All nonnegative multiplicity vectors with the prescribed corner pattern,
// entries bounded by cap, zero on the basepoint region.  Lattice route:
// propagate the vertex relations, branch where underdetermined.
std::vector<Domain> enumerate_positive_triangle_domains(const DomainModel& m,
                                                        const CornerPattern& p, int cap);

// Independent route: depth-first over the raw multiplicity product space in
// fixed region order, pruning only on completed vertex relations.
std::vector<Domain> enumerate_positive_triangle_domains_bruteforce(const DomainModel& m,
                                                                   const CornerPattern& p,
                                                                   int cap);

struct TriangleLemmaReport {
    int cap = 0;
    long long patterns_checked = 0;
    long long domains_checked = 0;
    long long boundary_touching = 0;
    bool all_euler_g_over_4 = true;
    std::optional<Domain> witness;
    Rat witness_euler;
};

// Exhausts every corner pattern; asserts e(B) = g/4 for each enumerated
// domain.  The index consequence ind = g - chi(S) + m >= 1 for
// boundary-touching domains follows arithmetically from chi(S) <= g, m >= 1.
TriangleLemmaReport verify_triangle_lemma(const DomainModel& m, int cap);

} // namespace bf
