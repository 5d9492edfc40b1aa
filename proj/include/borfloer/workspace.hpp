#pragma once

// Manifest-driven workspace: named circles, type-D fixtures and morphism
// fixtures.  Every structure must pass the compatibility equation at load
// time or it is quarantined with the violation report.

#include <filesystem>
#include <map>

#include "borfloer/jsonio.hpp"

namespace bf {

struct Workspace {
    std::map<std::string, PointedMatchedCircle> pmcs;
    std::map<std::string, TypeDStructure> structures;
    std::map<std::string, std::string> structure_pmc; // structure -> pmc name
    std::map<std::string, MorphismData> morphisms;
    struct Quarantined {
        std::string name;
        std::string reason;
    };
    std::vector<Quarantined> quarantine;

    const TypeDStructure& structure(const std::string& name) const;
    TypeDMorphism morphism(const std::string& name) const;
};

Workspace load_workspace(const std::filesystem::path& manifest_path);

// worker count from BORFLOER_THREADS, default hardware concurrency
int worker_count();

// deterministic parallel map-reduce over [0, n): results are combined in
// index order regardless of scheduling
void parallel_chunks(int n, const std::function<void(int, int)>& run_chunk);

} // namespace bf
