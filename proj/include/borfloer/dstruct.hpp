#pragma once

// Type-D structures over the strands algebra of the reversed circle, their
// morphism complexes, chain-level composition in three guises, homology over
// GF(2), homotopy solving, and filtered-map inversion.

#include <memory>
#include <optional>
#include <string>

#include "borfloer/f2.hpp"
#include "borfloer/rational.hpp"
#include "borfloer/strands.hpp"

namespace bf {

struct TypeDGenerator {
    std::string name;
    Idempotent idem;
};

struct DeltaEntry {
    int from = 0;
    AlgebraElement coeff;
    int to = 0;
};

// Generators with idempotents and a delta^1 with algebra coefficients.  The
// circle handed in is the boundary circle Z; coefficients live over the
// algebra of the reversed circle.
class TypeDStructure {
public:
    TypeDStructure(const PointedMatchedCircle& z, std::vector<TypeDGenerator> generators);

    const PointedMatchedCircle& circle() const { return *z_; }
    const PointedMatchedCircle& algebra_circle() const { return *zrev_; }

    int num_generators() const { return (int)gens_.size(); }
    const TypeDGenerator& generator(int i) const { return gens_[i]; }
    int generator_index(const std::string& name) const;

    // entry coefficients must satisfy i_from a i_to = a (IdempotentViolation)
    void add_delta(int from, const AlgebraElement& coeff, int to);
    void add_delta(const std::string& from, const AlgebraElement& coeff,
                   const std::string& to);
    const std::vector<DeltaEntry>& delta1() const { return delta_; }

    // delta^1 applied to a generator, as (basis term, target) pairs
    std::vector<std::pair<StrandTerm, int>> delta_of(int gen) const;

    AlgebraElement make_element(std::vector<StrandTerm> terms) const;

    // test hook and fixture plumbing; not part of the calculus
    std::vector<TypeDGenerator>& mutable_generators() { return gens_; }

private:
    std::shared_ptr<const PointedMatchedCircle> z_;
    std::shared_ptr<const PointedMatchedCircle> zrev_;
    std::vector<TypeDGenerator> gens_;
    std::vector<DeltaEntry> delta_;
};

struct StructureViolation {
    int generator = -1;
    std::string residual; // printable description of the failing term
};

// evaluates (mu2 x I)(I x delta1)delta1 + (mu1 x I)delta1 on every generator
std::optional<StructureViolation> check_structure_equation(const TypeDStructure& n);

// builds m1 on (basis element, generator) pairs and verifies m1^2 = 0
bool induced_module_check(const TypeDStructure& n);

// delta^i as an F2-set of (source generator, tensor word, target generator)
// triples; empty means the map is zero
struct DeltaWord {
    int source = 0;
    std::vector<StrandTerm> word;
    int target = 0;
    friend bool operator==(const DeltaWord&, const DeltaWord&) = default;
    friend auto operator<=>(const DeltaWord&, const DeltaWord&) = default;
};
std::set<DeltaWord> iterate_delta(const TypeDStructure& n, int i);

struct Boundedness {
    bool bounded = false;
    int vanishing_power = -1; // minimal i <= cutoff with delta^i = 0
};
Boundedness is_bounded(const TypeDStructure& n, int cutoff);

struct BasicMorphism {
    int from = 0; // generator of N1
    StrandTerm coeff;
    int to = 0; // generator of N2
    friend bool operator==(const BasicMorphism&, const BasicMorphism&) = default;
    friend auto operator<=>(const BasicMorphism&, const BasicMorphism&) = default;
};

struct ChainComplexF2 {
    std::vector<std::string> labels;
    F2Matrix differential; // square, d^2 = 0
};

// The Mor complex: basis of basic morphisms, differential from the type-D
// homomorphism equation.  D^2 = 0 is verified at build time.
struct MorComplex {
    const TypeDStructure* n1 = nullptr;
    const TypeDStructure* n2 = nullptr;
    std::vector<BasicMorphism> basis;
    F2Matrix differential;
    int index_of(const BasicMorphism& b) const;
    ChainComplexF2 complex() const;
};

MorComplex mor_complex(const TypeDStructure& n1, const TypeDStructure& n2);

// The same matrix assembled by entry transcription through the dual delta and
// the target delta, never evaluating a morphism; must equal
// mor_complex().differential verbatim.
F2Matrix box_tensor_differential(const MorComplex& mc);

struct TypeDMorphism {
    const TypeDStructure* source = nullptr;
    const TypeDStructure* target = nullptr;
    std::set<BasicMorphism> entries;
};

TypeDMorphism make_morphism(const TypeDStructure& source, const TypeDStructure& target,
                            std::set<BasicMorphism> entries);
TypeDMorphism identity_morphism(const TypeDStructure& n);

std::vector<char> morphism_coords(const MorComplex& mc, const TypeDMorphism& f);
TypeDMorphism coords_morphism(const MorComplex& mc, const std::vector<char>& v);

// composition of f in Mor(N1,N2) with g in Mor(N2,N3): g after f
TypeDMorphism compose(const TypeDMorphism& f, const TypeDMorphism& g);
// the evaluation-map pipeline ev -> idempotent collapse -> multiplication
TypeDMorphism compose_via_evaluation(const TypeDMorphism& f, const TypeDMorphism& g);
// the triangle-count formula through the doubled fixture, with nearest-point
// identification the identity on generator names
TypeDMorphism g_at_map(const TypeDMorphism& f, const TypeDMorphism& g);

struct HomologyReport {
    int rank = 0;
    std::vector<std::vector<char>> representatives;
};
HomologyReport homology(const ChainComplexF2& c);

// composes representatives and reduces modulo boundaries
std::vector<char> yoneda_product(const MorComplex& m12, const MorComplex& m23,
                                 const MorComplex& m13, const std::vector<char>& class12,
                                 const std::vector<char>& class23);

std::optional<TypeDMorphism> is_homotopic(const TypeDMorphism& f, const TypeDMorphism& g);

struct FilteredLinearMap {
    F2Matrix matrix;         // square over one basis
    std::vector<Rat> levels; // filtration level per basis element
};

// F = F0 + l with F0 level-preserving and invertible, l strictly lowering;
// returns the two-sided inverse F0^-1 sum (l F0^-1)^i
F2Matrix invert_filtered(const FilteredLinearMap& f);

} // namespace bf
