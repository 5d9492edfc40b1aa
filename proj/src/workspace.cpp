#include "borfloer/workspace.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <thread>

#include "borfloer/errors.hpp"

namespace bf {

namespace {

json read_json_file(const std::filesystem::path& p)
{
    std::ifstream in(p);
    if (!in) fail(errc::bad_input, "cannot open " + p.string());
    json j;
    in >> j;
    return j;
}

} // namespace

const TypeDStructure& Workspace::structure(const std::string& name) const
{
    auto it = structures.find(name);
    if (it == structures.end()) {
        for (auto& q : quarantine)
            if (q.name == name)
                fail(errc::bad_input, "structure " + name + " is quarantined: " + q.reason);
        fail(errc::bad_input, "unknown structure " + name);
    }
    return it->second;
}

TypeDMorphism Workspace::morphism(const std::string& name) const
{
    auto it = morphisms.find(name);
    if (it == morphisms.end()) fail(errc::bad_input, "unknown morphism " + name);
    return build_morphism(structure(it->second.source), structure(it->second.target),
                          it->second);
}

Workspace load_workspace(const std::filesystem::path& manifest_path)
{
    Workspace ws;
    json manifest = read_json_file(manifest_path);
    auto base = manifest_path.parent_path();
    auto resolve = [&](const json& v) {
        if (v.is_string()) return read_json_file(base / v.get<std::string>());
        return v;
    };
    const json pmcs = manifest.value("pmcs", json::object());
    const json structures = manifest.value("structures", json::object());
    const json morphisms = manifest.value("morphisms", json::object());
    for (auto& [name, v] : pmcs.items()) {
        auto z = pmc_from_json(resolve(v));
        ws.pmcs.emplace(name, std::move(z));
    }
    for (auto& [name, v] : structures.items()) {
        json j = resolve(v);
        std::string pmc_name = j.at("pmc").get<std::string>();
        auto zit = ws.pmcs.find(pmc_name);
        if (zit == ws.pmcs.end()) fail(errc::bad_input, "structure " + name +
                                                            " references unknown pmc " + pmc_name);
        try {
            auto n = structure_from_json(zit->second, j);
            if (auto violation = check_structure_equation(n)) {
                ws.quarantine.push_back(
                    {name, "structure equation fails on generator " +
                               n.generator(violation->generator).name + " with residual " +
                               violation->residual});
            } else {
                ws.structures.emplace(name, std::move(n));
                ws.structure_pmc[name] = pmc_name;
            }
        } catch (const error& e) {
            ws.quarantine.push_back({name, e.what()});
        }
    }
    for (auto& [name, v] : morphisms.items())
        ws.morphisms.emplace(name, morphism_from_json(resolve(v)));
    return ws;
}

int worker_count()
{
    if (const char* env = std::getenv("BORFLOER_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

void parallel_chunks(int n, const std::function<void(int, int)>& run_chunk)
{
    int workers = std::min(worker_count(), std::max(1, n));
    if (workers <= 1 || n == 0) {
        if (n > 0) run_chunk(0, n);
        return;
    }
    std::vector<std::thread> threads;
    int per = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = w * per, hi = std::min(n, (w + 1) * per);
        if (lo >= hi) break;
        threads.emplace_back([=, &run_chunk] { run_chunk(lo, hi); });
    }
    for (auto& t : threads) t.join();
}

} // namespace bf
