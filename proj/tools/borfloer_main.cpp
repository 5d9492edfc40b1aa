// Command-line front end: fixture loading, verification suites, computation
// commands, deterministic report emission.  Exit codes: 0 pass, 1
// verification failure with witness, 2 input error.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>

#include "borfloer/errors.hpp"
#include "borfloer/workspace.hpp"

using namespace bf;

namespace {

json read_json_file(const std::string& p)
{
    std::ifstream in(p);
    if (!in) fail(errc::bad_input, "cannot open " + p);
    json j;
    in >> j;
    return j;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::bad_input, "cannot write " + path);
    out << text;
}

void emit_report(const std::string& path, const json& j)
{
    if (!path.empty()) write_text(path, j.dump(2) + "\n");
}

AtOffsets parse_offsets(const std::string& text)
{
    AtOffsets off;
    if (text.empty()) return off;
    auto comma = text.find(',');
    if (comma == std::string::npos)
        fail(errc::bad_input, "offsets must be two rationals a,b");
    off.g_base = parse_rat(text.substr(0, comma));
    off.e_extra = parse_rat(text.substr(comma + 1));
    return off;
}

struct CheckResult {
    std::string name;
    bool pass = true;
    long long cases = 0;
};

CheckResult check_axioms(const PointedMatchedCircle& z)
{
    CheckResult res{"axioms"};
    StrandBasis basis(z);
    const int n = (int)basis.size();
    std::atomic<bool> ok{true};
    std::atomic<long long> cases{0};
    // d^2 and unit/idempotent laws, linear in the basis
    auto u = unit(z);
    parallel_chunks(n, [&](int lo, int hi) {
        long long local = 0;
        for (int i = lo; i < hi; ++i) {
            auto e = element_of(z, basis.all()[i]);
            if (!differential_strands(differential_strands(e)).is_zero()) ok = false;
            if (!(multiply_strands(u, e) == e) || !(multiply_strands(e, u) == e)) ok = false;
            auto il = idempotent_element(z, left_idem(z, basis.all()[i]));
            auto ir = idempotent_element(z, right_idem(z, basis.all()[i]));
            if (!(multiply_strands(il, e) == e) || !(multiply_strands(e, ir) == e)) ok = false;
            local += 3;
        }
        cases += local;
    });
    // Leibniz over all pairs
    parallel_chunks(n, [&](int lo, int hi) {
        long long local = 0;
        for (int i = lo; i < hi; ++i)
            for (int j = 0; j < n; ++j) {
                auto a = element_of(z, basis.all()[i]);
                auto b = element_of(z, basis.all()[j]);
                auto lhs = differential_strands(multiply_strands(a, b));
                auto rhs = multiply_strands(differential_strands(a), b) +
                           multiply_strands(a, differential_strands(b));
                if (!(lhs == rhs)) ok = false;
                ++local;
            }
        cases += local;
    });
    // associativity: exhaustive at genus 1, randomized above
    if (n <= 16) {
        parallel_chunks(n, [&](int lo, int hi) {
            long long local = 0;
            for (int i = lo; i < hi; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        auto a = element_of(z, basis.all()[i]);
                        auto b = element_of(z, basis.all()[j]);
                        auto c = element_of(z, basis.all()[k]);
                        if (!(multiply_strands(multiply_strands(a, b), c) ==
                              multiply_strands(a, multiply_strands(b, c))))
                            ok = false;
                        ++local;
                    }
            cases += local;
        });
    } else {
        std::mt19937_64 rng(2026);
        std::vector<std::array<int, 3>> triples(10000);
        for (auto& t : triples)
            t = {(int)(rng() % n), (int)(rng() % n), (int)(rng() % n)};
        parallel_chunks((int)triples.size(), [&](int lo, int hi) {
            long long local = 0;
            for (int i = lo; i < hi; ++i) {
                auto [x, y, w] = triples[i];
                auto a = element_of(z, basis.all()[x]);
                auto b = element_of(z, basis.all()[y]);
                auto c = element_of(z, basis.all()[w]);
                if (!(multiply_strands(multiply_strands(a, b), c) ==
                      multiply_strands(a, multiply_strands(b, c))))
                    ok = false;
                ++local;
            }
            cases += local;
        });
    }
    res.pass = ok;
    res.cases = cases;
    return res;
}

CheckResult check_az(const PointedMatchedCircle& z)
{
    CheckResult res{"az"};
    AzModel m = build_az(z);
    StrandBasis basis(z);
    auto gens = m.generators();
    std::atomic<bool> ok{true};
    std::atomic<long long> cases{0};
    if (gens.size() != basis.size()) ok = false;
    parallel_chunks((int)gens.size(), [&](int lo, int hi) {
        long long local = 0;
        for (int i = lo; i < hi; ++i) {
            auto& g = gens[i];
            auto t = m.to_strand(g);
            if (basis.index_of(t) < 0 || !(m.from_strand(t) == g)) ok = false;
            AlgebraElement dm = zero_element(z);
            for (auto& y : m.differential(g)) dm.toggle(m.to_strand(y));
            if (!(dm == differential_strands(element_of(z, t)))) ok = false;
            local += 2;
        }
        cases += local;
    });
    // action checks: exhaustive at genus 1, randomized sample otherwise
    std::vector<std::pair<int, int>> jobs;
    if (basis.size() <= 16) {
        for (int a = 0; a < (int)basis.size(); ++a)
            for (int g = 0; g < (int)gens.size(); ++g) jobs.push_back({a, g});
    } else {
        std::mt19937_64 rng(2027);
        for (int i = 0; i < 10000; ++i)
            jobs.push_back({(int)(rng() % basis.size()), (int)(rng() % gens.size())});
    }
    parallel_chunks((int)jobs.size(), [&](int lo, int hi) {
        long long local = 0;
        for (int i = lo; i < hi; ++i) {
            auto [ai, gi] = jobs[i];
            auto& a = basis.all()[ai];
            auto& g = gens[gi];
            AlgebraElement left = zero_element(z), right = zero_element(z);
            for (auto& y : m.action_left(a, g)) left.toggle(m.to_strand(y));
            for (auto& y : m.action_right(g, a)) right.toggle(m.to_strand(y));
            auto ea = element_of(z, a);
            auto eg = element_of(z, m.to_strand(g));
            if (!(left == multiply_strands(ea, eg))) ok = false;
            if (!(right == multiply_strands(eg, ea))) ok = false;
            local += 2;
        }
        cases += local;
    });
    res.pass = ok;
    res.cases = cases;
    return res;
}

CheckResult check_at(const PointedMatchedCircle& z)
{
    CheckResult res{"at"};
    AtModel m = build_at(z);
    const auto& zr = m.reversed_circle();
    auto xs = m.face_generators(AtFace::gamma_delta);
    auto ys = m.face_generators(AtFace::delta_epsilon);
    std::atomic<bool> ok{true};
    std::atomic<long long> cases{0};
    std::vector<std::pair<int, int>> jobs;
    if (xs.size() <= 16) {
        for (int i = 0; i < (int)xs.size(); ++i)
            for (int j = 0; j < (int)ys.size(); ++j) jobs.push_back({i, j});
    } else {
        std::mt19937_64 rng(2028);
        for (int i = 0; i < 2000; ++i)
            jobs.push_back({(int)(rng() % xs.size()), (int)(rng() % ys.size())});
    }
    parallel_chunks((int)jobs.size(), [&](int lo, int hi) {
        long long local = 0;
        for (int i = lo; i < hi; ++i) {
            auto& x = xs[jobs[i].first];
            auto& y = ys[jobs[i].second];
            AlgebraElement lhs = zero_element(zr);
            for (auto& g : m.triangle_product(x, y))
                lhs.toggle(m.to_strand(AtFace::gamma_epsilon, g));
            auto rhs = multiply_strands(element_of(zr, m.to_strand(AtFace::gamma_delta, x)),
                                        element_of(zr, m.to_strand(AtFace::delta_epsilon, y)));
            if (!(lhs == rhs)) ok = false;
            ++local;
        }
        cases += local;
    });
    res.pass = ok;
    res.cases = cases;
    return res;
}

int cmd_pmc_validate(const std::string& file)
{
    auto z = pmc_from_json(read_json_file(file));
    json out = pmc_to_json(z);
    out["genus"] = z.genus();
    out["valid"] = true;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_algebra(const std::string& file, const std::string& checks_csv,
                const std::string& report_path)
{
    auto z = pmc_from_json(read_json_file(file));
    StrandBasis basis(z);
    std::cout << "pmc " << (z.name().empty() ? "(unnamed)" : z.name()) << ": points="
              << z.points() << " genus=" << z.genus() << "\n";
    std::cout << "basis (" << basis.size() << "):\n";
    for (auto& t : basis.all()) {
        std::cout << "  w" << t.weight() << ":";
        for (auto& c : t.chords) std::cout << " [" << c.start << "," << c.end << "]";
        for (int h : t.horizontals) std::cout << " h" << h;
        std::cout << "\n";
    }
    std::vector<std::string> wanted;
    {
        std::string cur;
        for (char c : checks_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) wanted.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
    }
    json report;
    report["pmc"] = pmc_to_json(z);
    report["basis_size"] = basis.size();
    json jchecks = json::array();
    bool all_pass = true;
    std::string first_fail;
    for (auto& w : wanted) {
        CheckResult r;
        if (w == "axioms")
            r = check_axioms(z);
        else if (w == "az")
            r = check_az(z);
        else if (w == "at")
            r = check_at(z);
        else
            fail(errc::bad_input, "unknown check " + w);
        std::cout << "check " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                  << r.cases << " cases)\n";
        jchecks.push_back({{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}});
        if (!r.pass && all_pass) first_fail = r.name;
        all_pass = all_pass && r.pass;
    }
    report["checks"] = jchecks;
    report["pass"] = all_pass;
    emit_report(report_path, report);
    if (!all_pass) {
        std::cout << "first failing check: " << first_fail << "\n";
        return 1;
    }
    return 0;
}

int cmd_mor(const std::string& manifest, const std::string& n1, const std::string& n2,
            const std::string& n3, const std::string& report_path)
{
    auto ws = load_workspace(manifest);
    json report;
    auto quarantined = [&](const std::string& name) -> const Workspace::Quarantined* {
        for (auto& q : ws.quarantine)
            if (q.name == name) return &q;
        return nullptr;
    };
    for (auto& name : {n1, n2, n3}) {
        if (name.empty()) continue;
        if (auto q = quarantined(name)) {
            report["quarantined"] = q->name;
            report["reason"] = q->reason;
            std::cout << "structure " << q->name << " quarantined: " << q->reason << "\n";
            emit_report(report_path, report);
            return 2;
        }
    }
    const auto& a = ws.structure(n1);
    const auto& b = ws.structure(n2);
    auto mc = mor_complex(a, b);
    auto h = homology(mc.complex());
    report["dim"] = mc.basis.size();
    report["homology_rank"] = h.rank;
    report["box_tensor_identical"] = box_tensor_differential(mc) == mc.differential;
    std::cout << "Mor(" << n1 << "," << n2 << "): dim=" << mc.basis.size()
              << " homology_rank=" << h.rank << "\n";
    if (!n3.empty()) {
        const auto& c = ws.structure(n3);
        auto mc23 = mor_complex(b, c);
        auto mc13 = mor_complex(a, c);
        bool agree = true;
        for (auto& e1 : mc.basis)
            for (auto& e2 : mc23.basis) {
                auto f = make_morphism(a, b, {e1});
                auto g = make_morphism(b, c, {e2});
                auto h1 = compose(f, g);
                if (!(h1.entries == compose_via_evaluation(f, g).entries) ||
                    !(h1.entries == g_at_map(f, g).entries))
                    agree = false;
            }
        report["composition_agreement"] = agree;
        std::cout << "composition_agreement: " << (agree ? "true" : "false") << "\n";
        // Yoneda product table on homology representatives
        auto h23 = homology(mc23.complex());
        json table = json::array();
        for (size_t i = 0; i < h.representatives.size(); ++i)
            for (size_t j = 0; j < h23.representatives.size(); ++j) {
                auto prod = yoneda_product(mc, mc23, mc13, h.representatives[i],
                                           h23.representatives[j]);
                json cycle = json::array();
                for (size_t k = 0; k < prod.size(); ++k)
                    if (prod[k]) cycle.push_back(mc13.complex().labels[k]);
                table.push_back({{"left", (int)i}, {"right", (int)j}, {"product", cycle}});
            }
        report["yoneda"] = table;
        if (!agree) {
            emit_report(report_path, report);
            return 1;
        }
    }
    emit_report(report_path, report);
    return 0;
}

int cmd_compose(const std::string& manifest, const std::string& fname,
                const std::string& gname, const std::string& report_path)
{
    auto ws = load_workspace(manifest);
    auto f = ws.morphism(fname);
    auto g = ws.morphism(gname);
    auto h = compose(f, g);
    auto out = morphism_to_json(h, ws.morphisms.at(fname).source,
                                ws.morphisms.at(gname).target);
    std::cout << out.dump(2) << "\n";
    emit_report(report_path, out);
    return 0;
}

int cmd_homology(const std::string& manifest, const std::string& n1, const std::string& n2,
                 const std::string& report_path)
{
    auto ws = load_workspace(manifest);
    auto mc = mor_complex(ws.structure(n1), ws.structure(n2));
    auto rep = homology(mc.complex());
    auto out = homology_to_json(mc.complex(), rep);
    std::cout << out.dump(2) << "\n";
    emit_report(report_path, out);
    return 0;
}

int cmd_verify_lemma(const std::string& file, int cap, const std::string& offsets,
                     const std::string& dump_path, const std::string& report_path)
{
    auto z = pmc_from_json(read_json_file(file));
    auto off = parse_offsets(offsets);
    AtModel m = build_at(z, off);
    if (!dump_path.empty()) write_text(dump_path, at_dump(m).dump(2) + "\n");
    auto rep = verify_triangle_lemma(domain_model(m), cap);
    auto out = lemma_report_to_json(rep, z.name(), z.genus(), off);
    std::cout << "triangle lemma on " << (z.name().empty() ? "(unnamed)" : z.name())
              << " cap=" << cap << ": " << (rep.all_euler_g_over_4 ? "PASS" : "FAIL")
              << " domains=" << rep.domains_checked
              << " boundary_touching=" << rep.boundary_touching << "\n";
    emit_report(report_path, out);
    return rep.all_euler_g_over_4 ? 0 : 1;
}

int cmd_dump(const std::string& file, const std::string& model, const std::string& offsets,
             const std::string& out_path)
{
    auto z = pmc_from_json(read_json_file(file));
    json j;
    if (model == "az") {
        j = az_dump(build_az(z));
    } else if (model == "at") {
        j = at_dump(build_at(z, parse_offsets(offsets)));
    } else {
        fail(errc::bad_input, "model must be az or at");
    }
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_text(out_path, j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bordered Floer morphism-space calculus"};
    app.require_subcommand(1);

    auto* pmc_cmd = app.add_subcommand("pmc", "pointed matched circle utilities");
    pmc_cmd->require_subcommand(1);
    auto* pmc_validate = pmc_cmd->add_subcommand("validate", "validate a circle file");
    std::string pmc_file;
    pmc_validate->add_option("file", pmc_file)->required();

    auto* algebra = app.add_subcommand("algebra", "build the strands algebra and run checks");
    std::string alg_pmc, alg_checks = "axioms", alg_report;
    algebra->add_option("--pmc", alg_pmc)->required();
    algebra->add_option("--check", alg_checks);
    algebra->add_option("--report", alg_report);

    auto* mor = app.add_subcommand("mor", "morphism complex of two fixtures");
    std::string mor_manifest, mor_n1, mor_n2, mor_n3, mor_report;
    mor->add_option("--manifest", mor_manifest)->required();
    mor->add_option("--n1", mor_n1)->required();
    mor->add_option("--n2", mor_n2)->required();
    mor->add_option("--n3", mor_n3);
    mor->add_option("--report", mor_report);

    auto* comp = app.add_subcommand("compose", "compose two morphism fixtures");
    std::string comp_manifest, comp_f, comp_g, comp_report;
    comp->add_option("--manifest", comp_manifest)->required();
    comp->add_option("--f", comp_f)->required();
    comp->add_option("--g", comp_g)->required();
    comp->add_option("--report", comp_report);

    auto* hom = app.add_subcommand("homology", "homology of a Mor complex");
    std::string hom_manifest, hom_n1, hom_n2, hom_report;
    hom->add_option("--manifest", hom_manifest)->required();
    hom->add_option("--n1", hom_n1)->required();
    hom->add_option("--n2", hom_n2)->required();
    hom->add_option("--report", hom_report);

    auto* lemma = app.add_subcommand("verify-triangle-lemma", "exhaust triangle domains");
    std::string lem_pmc, lem_offsets, lem_dump, lem_report;
    int lem_cap = 4;
    lemma->add_option("--pmc", lem_pmc)->required();
    lemma->add_option("--cap", lem_cap);
    lemma->add_option("--offsets", lem_offsets);
    lemma->add_option("--dump-diagram", lem_dump);
    lemma->add_option("--report", lem_report);

    auto* dump = app.add_subcommand("dump-diagram", "write a diagram model dump");
    std::string dump_pmc, dump_model = "az", dump_offsets, dump_out;
    dump->add_option("--pmc", dump_pmc)->required();
    dump->add_option("--model", dump_model);
    dump->add_option("--offsets", dump_offsets);
    dump->add_option("-o,--out", dump_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*pmc_validate) return cmd_pmc_validate(pmc_file);
        if (*algebra) return cmd_algebra(alg_pmc, alg_checks, alg_report);
        if (*mor) return cmd_mor(mor_manifest, mor_n1, mor_n2, mor_n3, mor_report);
        if (*comp) return cmd_compose(comp_manifest, comp_f, comp_g, comp_report);
        if (*hom) return cmd_homology(hom_manifest, hom_n1, hom_n2, hom_report);
        if (*lemma) return cmd_verify_lemma(lem_pmc, lem_cap, lem_offsets, lem_dump, lem_report);
        if (*dump) return cmd_dump(dump_pmc, dump_model, dump_offsets, dump_out);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
