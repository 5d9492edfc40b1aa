#include "borfloer/jsonio.hpp"

#include "borfloer/errors.hpp"

namespace bf {

json pmc_to_json(const PointedMatchedCircle& z)
{
    json j;
    j["points"] = z.points();
    j["matching"] = z.matching();
    if (!z.name().empty()) j["name"] = z.name();
    return j;
}

PointedMatchedCircle pmc_from_json(const json& j)
{
    if (!j.contains("points") || !j.contains("matching"))
        fail(errc::bad_input, "pmc json needs points and matching");
    std::vector<int> matching = j.at("matching").get<std::vector<int>>();
    std::string name = j.value("name", "");
    return PointedMatchedCircle::validate(j.at("points").get<int>(), std::move(matching),
                                          name);
}

json element_to_json(const AlgebraElement& e)
{
    json terms = json::array();
    for (auto& t : e.terms) {
        json jt;
        json chords = json::array();
        for (auto& c : t.chords) chords.push_back({c.start, c.end});
        jt["chords"] = chords;
        jt["horizontals"] = t.horizontals;
        terms.push_back(jt);
    }
    json j;
    j["terms"] = terms;
    return j;
}

AlgebraElement element_from_json(const PointedMatchedCircle& algebra_circle, const json& j)
{
    std::vector<StrandTerm> terms;
    for (auto& jt : j.at("terms")) {
        StrandTerm t;
        for (auto& c : jt.value("chords", json::array()))
            t.chords.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
        for (auto& h : jt.value("horizontals", json::array())) t.horizontals.push_back(h.get<int>());
        std::sort(t.chords.begin(), t.chords.end());
        std::sort(t.horizontals.begin(), t.horizontals.end());
        terms.push_back(std::move(t));
    }
    return element(algebra_circle, std::move(terms));
}

json structure_to_json(const TypeDStructure& n, const std::string& pmc_name)
{
    json j;
    j["pmc"] = pmc_name;
    json gens = json::array();
    for (int i = 0; i < n.num_generators(); ++i) {
        json g;
        g["name"] = n.generator(i).name;
        g["idempotent"] = std::vector<int>(n.generator(i).idem.pairs.begin(),
                                           n.generator(i).idem.pairs.end());
        gens.push_back(g);
    }
    j["generators"] = gens;
    json delta = json::array();
    for (auto& e : n.delta1()) {
        json d;
        d["from"] = n.generator(e.from).name;
        d["coeff"] = element_to_json(e.coeff);
        d["to"] = n.generator(e.to).name;
        delta.push_back(d);
    }
    j["delta1"] = delta;
    return j;
}

TypeDStructure structure_from_json(const PointedMatchedCircle& z, const json& j)
{
    std::vector<TypeDGenerator> gens;
    for (auto& g : j.at("generators")) {
        Idempotent idem;
        for (auto& p : g.value("idempotent", json::array())) idem.pairs.insert(p.get<int>());
        gens.push_back({g.at("name").get<std::string>(), idem});
    }
    TypeDStructure n(z, std::move(gens));
    for (auto& d : j.value("delta1", json::array())) {
        auto coeff = element_from_json(n.algebra_circle(), d.at("coeff"));
        n.add_delta(d.at("from").get<std::string>(), coeff, d.at("to").get<std::string>());
    }
    return n;
}

MorphismData morphism_from_json(const json& j)
{
    MorphismData m;
    m.source = j.at("source").get<std::string>();
    m.target = j.at("target").get<std::string>();
    for (auto& e : j.value("entries", json::array()))
        m.entries.push_back({e.at("from").get<std::string>(), e.at("coeff"),
                             e.at("to").get<std::string>()});
    return m;
}

TypeDMorphism build_morphism(const TypeDStructure& source, const TypeDStructure& target,
                             const MorphismData& data)
{
    std::set<BasicMorphism> entries;
    for (auto& [from, coeff, to] : data.entries) {
        auto e = element_from_json(source.algebra_circle(), coeff);
        for (auto& t : e.terms) {
            BasicMorphism b{source.generator_index(from), t, target.generator_index(to)};
            auto it = entries.find(b);
            if (it == entries.end())
                entries.insert(std::move(b));
            else
                entries.erase(it);
        }
    }
    return make_morphism(source, target, std::move(entries));
}

json morphism_to_json(const TypeDMorphism& f, const std::string& source_name,
                      const std::string& target_name)
{
    json j;
    j["source"] = source_name;
    j["target"] = target_name;
    json entries = json::array();
    for (auto& b : f.entries) {
        json e;
        e["from"] = f.source->generator(b.from).name;
        AlgebraElement el = zero_element(f.source->algebra_circle());
        el.toggle(b.coeff);
        e["coeff"] = element_to_json(el);
        e["to"] = f.target->generator(b.to).name;
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j;
}

json homology_to_json(const ChainComplexF2& c, const HomologyReport& rep)
{
    json j;
    j["rank"] = rep.rank;
    json reps = json::array();
    for (auto& v : rep.representatives) {
        json cycle = json::array();
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) cycle.push_back(c.labels[i]);
        reps.push_back(cycle);
    }
    j["representatives"] = reps;
    return j;
}

json az_dump(const AzModel& m)
{
    json j;
    j["model"] = "az";
    j["pmc"] = pmc_to_json(m.circle());
    const int T = m.T();
    json verts = json::array();
    for (auto& v : m.gen_points()) {
        json jv;
        jv["s"] = v.s;
        jv["t"] = v.t;
        jv["x"] = v.s;
        jv["y"] = T - v.t;
        jv["kind"] = v.is_pair_point() ? "pair" : "interior";
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    json arcs = json::array();
    for (int p = 1; p <= m.circle().num_pairs(); ++p) {
        arcs.push_back({{"family", "alpha"}, {"pair", p}});
        arcs.push_back({{"family", "beta"}, {"pair", p}});
    }
    j["arcs"] = arcs;
    json regions = json::array();
    for (auto& r : m.regions()) {
        json jr;
        json cells = json::array();
        for (auto& [a, b] : r.cells) cells.push_back({a, b});
        jr["cells"] = cells;
        jr["diagonal_faces"] = r.diag_faces;
        jr["basepoint"] = r.basepoint;
        jr["corner_count"] = r.corner_count;
        regions.push_back(jr);
    }
    j["regions"] = regions;
    j["boundary_components"] = 2;
    return j;
}

json at_dump(const AtModel& m)
{
    json j;
    j["model"] = "at";
    j["pmc"] = pmc_to_json(m.circle());
    j["offsets"] = {{"g_base", m.offsets().g_base.str()}, {"e_extra", m.offsets().e_extra.str()}};
    json verts = json::array();
    for (auto& cr : m.crossings()) {
        json jv;
        jv["x"] = cr.pos.x.str();
        jv["y"] = cr.pos.y.str();
        jv["families"] = {family_name(cr.fam_a), family_name(cr.fam_b)};
        jv["lines"] = {cr.line_a, cr.line_b};
        jv["pair_point"] = cr.pair_point;
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    json arcs = json::array();
    for (int p = 1; p <= m.circle().num_pairs(); ++p)
        for (auto fam : {Family::gamma, Family::delta, Family::epsilon})
            arcs.push_back({{"family", family_name(fam)}, {"pair", p}});
    j["arcs"] = arcs;
    json regions = json::array();
    for (auto& r : m.regions()) {
        json jr;
        json corners = json::array();
        for (auto& [cid, ang] : r.corners) corners.push_back({cid, ang});
        jr["corners"] = corners;
        jr["basepoint"] = r.basepoint;
        jr["boundary"] = r.boundary_adjacent;
        jr["chi"] = r.chi;
        jr["area"] = r.area.str();
        regions.push_back(jr);
    }
    j["regions"] = regions;
    j["boundary_components"] = m.num_boundary_components();
    return j;
}

json lemma_report_to_json(const TriangleLemmaReport& rep, const std::string& pmc_name,
                          int genus, const AtOffsets& offsets)
{
    json j;
    j["pmc"] = pmc_name;
    j["genus"] = genus;
    j["cap"] = rep.cap;
    j["offsets"] = {{"g_base", offsets.g_base.str()}, {"e_extra", offsets.e_extra.str()}};
    j["patterns_checked"] = rep.patterns_checked;
    j["domains_checked"] = rep.domains_checked;
    j["boundary_touching"] = rep.boundary_touching;
    j["all_euler_g_over_4"] = rep.all_euler_g_over_4;
    if (rep.witness) {
        json w;
        w["multiplicities"] = rep.witness->multiplicities;
        w["pattern"] = {rep.witness->pattern.gd, rep.witness->pattern.de,
                        rep.witness->pattern.ge};
        w["euler_measure"] = rep.witness_euler.str();
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

} // namespace bf
