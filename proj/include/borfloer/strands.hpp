#pragma once

// Strand-diagram model of the algebra A(Z) of a pointed matched circle.
// Basis elements are sets of Reeb chords plus smeared horizontal strands;
// products and the crossing-resolution differential are computed by expanding
// each smeared horizontal into the sum of its two constant strands, working in
// the literal strands algebra, and regrouping.  The regrouping is asserted to
// be exact, which is a standing check that the smeared subspace is closed.

#include <map>
#include <set>
#include <vector>

#include "borfloer/pmc.hpp"

namespace bf {

struct StrandTerm {
    std::vector<ReebChord> chords; // sorted
    std::vector<int> horizontals;  // sorted pair ids
    friend bool operator==(const StrandTerm&, const StrandTerm&) = default;
    friend auto operator<=>(const StrandTerm&, const StrandTerm&) = default;
    int weight() const { return (int)chords.size() + (int)horizontals.size(); }
};

struct Idempotent {
    std::set<int> pairs;
    friend bool operator==(const Idempotent&, const Idempotent&) = default;
    friend auto operator<=>(const Idempotent&, const Idempotent&) = default;
};

// F2-sum of strand terms over one circle; set membership = coefficient 1.
struct AlgebraElement {
    const PointedMatchedCircle* circle = nullptr;
    std::set<StrandTerm> terms;

    bool is_zero() const { return terms.empty(); }
    void toggle(const StrandTerm& t)
    {
        auto it = terms.find(t);
        if (it == terms.end())
            terms.insert(t);
        else
            terms.erase(it);
    }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
    {
        return a.terms == b.terms;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b)
    {
        for (auto& t : b.terms) a.toggle(t);
        return a;
    }
};

// Checks the one-point-per-arc invariants of a term against the circle.
bool term_valid(const PointedMatchedCircle& z, const StrandTerm& t);

Idempotent left_idem(const PointedMatchedCircle& z, const StrandTerm& t);
Idempotent right_idem(const PointedMatchedCircle& z, const StrandTerm& t);

AlgebraElement element(const PointedMatchedCircle& z, std::vector<StrandTerm> terms);
AlgebraElement element_of(const PointedMatchedCircle& z, const StrandTerm& t);
AlgebraElement zero_element(const PointedMatchedCircle& z);

AlgebraElement multiply_strands(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement differential_strands(const AlgebraElement& a);

// Sum of all all-horizontal terms (one per subset of pairs).
AlgebraElement unit(const PointedMatchedCircle& z);
// The all-horizontal term on the given pair set.
StrandTerm idempotent_term(const Idempotent& i);
AlgebraElement idempotent_element(const PointedMatchedCircle& z, const Idempotent& i);

// The whole basis, sorted by (weight, chords, horizontals).
class StrandBasis {
public:
    explicit StrandBasis(const PointedMatchedCircle& z);
    const PointedMatchedCircle& circle() const { return *z_; }
    const std::vector<StrandTerm>& all() const { return basis_; }
    std::vector<StrandTerm> weight_group(int w) const;
    int index_of(const StrandTerm& t) const; // -1 if absent
    size_t size() const { return basis_.size(); }

private:
    const PointedMatchedCircle* z_;
    std::vector<StrandTerm> basis_;
    std::map<StrandTerm, int> index_;
};

} // namespace bf
