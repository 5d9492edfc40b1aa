#pragma once

// The AT(Z) triple: the square [0,4k+1]^2 with one vertical delta line, one
// gamma line of slope +1 and one epsilon line of slope -1 per marked point,
// all through (i, 4k+1) before perturbation.  Perturbation translates the
// gamma/epsilon lines; near the smaller point of each matched pair the three
// strands braid once pairwise (one small triangle), near the larger point
// they run in parallel, and the strand ends on the top edge glue across the
// pair's handle.  Basepoint handles join the (0,0), (T,0) and (T,T) corners.
// Corner angles are labels by family: gamma 30, delta 90, epsilon 150 degrees
// mod 180; every strand crossing is a 60/120 vertex.
//
// Offsets: gamma line m translated by m*g_base, epsilon line m by
// m*g_base + e_extra along the top edge.

#include <array>
#include <optional>

#include "borfloer/arrangement.hpp"
#include "borfloer/pmc.hpp"
#include "borfloer/strands.hpp"

namespace bf {

struct AtOffsets {
    Rat g_base{1, 1000};
    Rat e_extra{3, 10000};
};

// Interior crossing of two strands.
struct AtCrossing {
    RatPoint pos;
    Family fam_a, fam_b; // fam_a < fam_b in (gamma, delta, epsilon) order
    int line_a = 0, line_b = 0;
    bool pair_point = false;              // boundary-type generator point
    std::array<int, 4> sector_region{};   // CCW around the vertex
    std::array<int, 4> sector_angle{};    // 60/120 alternating
};

struct AtRegion {
    std::vector<std::pair<int, int>> corners; // (crossing id or -1, angle)
    bool basepoint = false;
    bool boundary_adjacent = false;
    int chi = 1;
    Rat area; // planar area, diagnostics
};

enum class AtFace { gamma_delta, delta_epsilon, gamma_epsilon };

// A generator of one of the three face diagrams: crossing ids, at most one
// per arc of each of the two families.
struct AtGenerator {
    std::vector<int> points; // sorted crossing ids
    friend bool operator==(const AtGenerator&, const AtGenerator&) = default;
    friend auto operator<=>(const AtGenerator&, const AtGenerator&) = default;
};

using AtGeneratorSum = std::set<AtGenerator>;

class AtModel {
public:
    AtModel(const PointedMatchedCircle& z, const AtOffsets& offsets);

    const PointedMatchedCircle& circle() const { return z_; }
    // face algebras live over the reversed circle
    const PointedMatchedCircle& reversed_circle() const { return zrev_; }
    int T() const { return 4 * z_.genus() + 1; }
    const AtOffsets& offsets() const { return off_; }

    const Arrangement& arrangement() const { return *arr_; }
    const std::vector<AtCrossing>& crossings() const { return crossings_; }
    const std::vector<AtRegion>& regions() const { return regions_; }
    int num_boundary_components() const { return boundary_components_; }

    std::vector<int> face_points(AtFace f) const;
    std::vector<AtGenerator> face_generators(AtFace f) const;
    bool generator_on_face(const AtGenerator& g, AtFace f) const;

    // strand readout over the reversed circle
    StrandTerm to_strand(AtFace f, const AtGenerator& g) const;
    AtGenerator from_strand(AtFace f, const StrandTerm& t) const;

    // combinatorial triangle count AZ_gd x AZ_de -> AZ_ge
    AtGeneratorSum triangle_product(const AtGenerator& x, const AtGenerator& y) const;

private:
    PointedMatchedCircle z_;
    PointedMatchedCircle zrev_;
    AtOffsets off_;
    std::optional<Arrangement> arr_;
    std::vector<AtCrossing> crossings_;
    std::vector<AtRegion> regions_;
    int boundary_components_ = 0;

    int rev(int point) const { return z_.points() + 1 - point; }
};

AtModel build_at(const PointedMatchedCircle& z, const AtOffsets& offsets = {});

} // namespace bf
