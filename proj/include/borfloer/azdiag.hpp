#pragma once

// Combinatorial model of the AZ(Z) diagram: the planar triangle bounded by the
// coordinate axes and the diagonal x+y = 4k+1, with one vertical beta line and
// one horizontal alpha line per marked point, quotiented along the diagonal by
// the matching.  Interior vertices sit at (s, 4k+1-t) for s < t; the two
// diagonal endpoints of a matched pair glue to a single boundary-type vertex.
// The differential counts empty embedded rectangles and the two module
// actions count half-strips along the bottom (left action) and left (right
// action) edges.

#include <map>
#include <set>
#include <vector>

#include "borfloer/pmc.hpp"
#include "borfloer/strands.hpp"

namespace bf {

enum class Family { alpha, beta, gamma, delta, epsilon, boundary };

const char* family_name(Family f);

// A generator point in diagonal coordinates: s <= t.  s == t encodes the
// glued boundary point of the pair M(s) (canonical representative: the
// smaller point of the pair).
struct AzVertex {
    int s = 0;
    int t = 0;
    friend bool operator==(const AzVertex&, const AzVertex&) = default;
    friend auto operator<=>(const AzVertex&, const AzVertex&) = default;
    bool is_pair_point() const { return s == t; }
};

struct DiagramGenerator {
    std::vector<AzVertex> points; // sorted
    friend bool operator==(const DiagramGenerator&, const DiagramGenerator&) = default;
    friend auto operator<=>(const DiagramGenerator&, const DiagramGenerator&) = default;
    int size() const { return (int)points.size(); }
};

using GeneratorSum = std::set<DiagramGenerator>;

// Region census entry of the AZ model (quotient of unit cells and diagonal
// half-cells).  Used for the dump and the model invariants; the counting
// operations work in diagonal coordinates directly.
struct AzRegion {
    std::vector<std::pair<int, int>> cells; // (a,b) of planar unit cells
    std::vector<int> diag_faces;            // m of diagonal half-cells F_m
    bool basepoint = false;
    int corner_count = 0; // corners after quotient fusion
};

class AzModel {
public:
    explicit AzModel(const PointedMatchedCircle& z);

    const PointedMatchedCircle& circle() const { return z_; }
    int T() const { return 4 * z_.genus() + 1; }

    const std::vector<AzVertex>& gen_points() const { return gen_points_; }
    const std::vector<AzRegion>& regions() const { return regions_; }
    int alpha_arcs() const { return z_.num_pairs(); }
    int beta_arcs() const { return z_.num_pairs(); }

    bool vertex_exists(const AzVertex& v) const;

    StrandTerm to_strand(const DiagramGenerator& x) const;
    DiagramGenerator from_strand(const StrandTerm& t) const;

    std::vector<DiagramGenerator> generators() const;

    GeneratorSum differential(const DiagramGenerator& x) const;
    GeneratorSum action_left(const StrandTerm& a, const DiagramGenerator& x) const;
    GeneratorSum action_right(const DiagramGenerator& x, const StrandTerm& b) const;

private:
    PointedMatchedCircle z_;
    std::vector<AzVertex> gen_points_;
    std::vector<AzRegion> regions_;
};

AzModel build_az(const PointedMatchedCircle& z);

} // namespace bf
