#pragma once

// JSON codecs for the file formats: pointed matched circles, algebra
// elements, type-D structures and morphisms, homology reports, diagram dumps
// and triangle-lemma reports.  Keys are emitted in sorted order so reports
// are byte-identical across runs.

#include <json.hpp>

#include "borfloer/atdiag.hpp"
#include "borfloer/azdiag.hpp"
#include "borfloer/domains.hpp"
#include "borfloer/dstruct.hpp"

namespace bf {

using nlohmann::json;

json pmc_to_json(const PointedMatchedCircle& z);
PointedMatchedCircle pmc_from_json(const json& j);

json element_to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const PointedMatchedCircle& algebra_circle, const json& j);

json structure_to_json(const TypeDStructure& n, const std::string& pmc_name);
TypeDStructure structure_from_json(const PointedMatchedCircle& z, const json& j);

struct MorphismData {
    std::string source, target;
    std::vector<std::tuple<std::string, json, std::string>> entries;
};
MorphismData morphism_from_json(const json& j);
TypeDMorphism build_morphism(const TypeDStructure& source, const TypeDStructure& target,
                             const MorphismData& data);
json morphism_to_json(const TypeDMorphism& f, const std::string& source_name,
                      const std::string& target_name);

json homology_to_json(const ChainComplexF2& c, const HomologyReport& rep);

json az_dump(const AzModel& m);
json at_dump(const AtModel& m);

json lemma_report_to_json(const TriangleLemmaReport& rep, const std::string& pmc_name,
                          int genus, const AtOffsets& offsets);

} // namespace bf
