#pragma once

// Pointed matched circles: 4k marked points on an oriented circle, matched in
// pairs, one basepoint.  Points are numbered 1..n along the orientation
// starting immediately after the basepoint; the basepoint itself is the gap
// between point n and point 1 and is not stored.

#include <string>
#include <vector>

namespace bf {

struct ReebChord {
    int start = 0; // s
    int end = 0;   // t, with 1 <= s < t <= n
    friend bool operator==(const ReebChord&, const ReebChord&) = default;
    friend auto operator<=>(const ReebChord&, const ReebChord&) = default;
};

class PointedMatchedCircle {
public:
    // Validates and canonicalizes (pair ids renumbered by first occurrence).
    // Throws error{not_multiple_of_four | pair_count_wrong | surgery_disconnected}.
    static PointedMatchedCircle validate(int points, std::vector<int> matching,
                                         std::string name = "");

    int points() const { return n_; }
    int genus() const { return n_ / 4; }
    int num_pairs() const { return n_ / 2; }
    const std::string& name() const { return name_; }

    // pair id (1-based, canonical) of a point 1..n
    int pair_of(int point) const { return matching_[point - 1]; }
    // the other point of pair_of(point)
    int partner(int point) const { return partner_[point - 1]; }
    // the two points of a pair id, in increasing order
    std::pair<int, int> pair_points(int pair_id) const { return pair_points_[pair_id - 1]; }
    const std::vector<int>& matching() const { return matching_; }

    std::vector<ReebChord> reeb_chords() const;

    // point i -> point n+1-i, matching transported; involutive.
    PointedMatchedCircle reverse_orientation() const;

    friend bool operator==(const PointedMatchedCircle& a, const PointedMatchedCircle& b)
    {
        return a.n_ == b.n_ && a.matching_ == b.matching_;
    }

private:
    PointedMatchedCircle() = default;
    int n_ = 0;
    std::vector<int> matching_;     // canonical pair id per point
    std::vector<int> partner_;      // partner point per point
    std::vector<std::pair<int, int>> pair_points_;
    std::string name_;
};

// Number of circles after 0-surgery on every matched pair, by successor
// traversal of the rerouted arcs.  Exposed for oracle tests.
int surgery_circle_count(int points, const std::vector<int>& matching);

// Independent oracle: union-find component count on the doubled-edge graph.
int surgery_circle_count_bruteforce(int points, const std::vector<int>& matching);

PointedMatchedCircle torus_circle();            // n=4, [A,B,A,B]
PointedMatchedCircle genus2_antipodal();        // n=8, [A,B,C,D,A,B,C,D]
PointedMatchedCircle genus2_blockwise();        // n=8, [A,B,A,B,C,D,C,D]
PointedMatchedCircle genus0_circle();           // n=0

} // namespace bf
