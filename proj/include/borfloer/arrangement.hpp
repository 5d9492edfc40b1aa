#pragma once

// Exact planar subdivision of a set of segments with rational endpoints.
// Segments may share endpoints or meet in T-junctions; every pairwise
// intersection splits the segments, a half-edge structure is built by exact
// angular sorting, and bounded faces are extracted as CCW orbits.  Collinear
// overlaps are rejected.

#include <array>
#include <vector>

#include "borfloer/azdiag.hpp" // Family
#include "borfloer/rational.hpp"

namespace bf {

struct RatPoint {
    Rat x, y;
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
    friend bool operator<(const RatPoint& a, const RatPoint& b)
    {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

struct ArrSegment {
    RatPoint a, b;
    Family family = Family::boundary;
    int line = 0;  // marked-point index of the line, 0 for boundary
    int pair = 0;  // matched-pair id of the arc, 0 for boundary
    int tag = 0;   // caller-defined (boundary edge kind, seam keys, ...)
};

struct ArrVertex {
    RatPoint p;
    std::vector<int> out; // outgoing half-edges, CCW by direction
};

// Half-edge h: twin = h^1, edge = h/2.
struct ArrEdge {
    int v[2];    // tail of half-edge 2e, tail of 2e+1
    int seg;     // originating segment
    int face[2]; // face left of half-edge 2e, of 2e+1
};

class Arrangement {
public:
    // Throws error{degenerate_offsets} on collinear overlaps.
    explicit Arrangement(std::vector<ArrSegment> segments);

    const std::vector<ArrSegment>& segments() const { return segs_; }
    const std::vector<ArrVertex>& vertices() const { return verts_; }
    const std::vector<ArrEdge>& edges() const { return edges_; }
    int num_faces() const { return nfaces_; }
    int outer_face() const { return outer_; }

    int he_tail(int h) const { return edges_[h / 2].v[h % 2]; }
    int he_head(int h) const { return edges_[h / 2].v[1 - h % 2]; }
    int he_face(int h) const { return edges_[h / 2].face[h % 2]; }
    int he_seg(int h) const { return edges_[h / 2].seg; }
    // direction of travel of half-edge h
    RatPoint he_dir(int h) const;
    // next half-edge of the face left of h
    int he_next(int h) const { return next_[h]; }

    // all half-edge orbits grouped by face
    const std::vector<std::vector<int>>& face_orbits() const { return orbits_; }

private:
    std::vector<ArrSegment> segs_;
    std::vector<ArrVertex> verts_;
    std::vector<ArrEdge> edges_;
    std::vector<int> next_;
    std::vector<std::vector<int>> orbits_;
    int nfaces_ = 0;
    int outer_ = -1;
};

// exact CCW comparison of direction vectors, angles measured in [0, 2pi)
bool dir_less(const RatPoint& d1, const RatPoint& d2);

} // namespace bf
