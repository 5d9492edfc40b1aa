#include "borfloer/domains.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "borfloer/errors.hpp"

namespace bf {

namespace {

int t_twelfths(int angle)
{
    switch (angle) {
    case 30: return 2;
    case 60: return 1;
    case 90: return 0;
    case 120: return -1;
    case 150: return -2;
    }
    fail(errc::bad_input, "unexpected corner angle " + std::to_string(angle));
}

} // namespace

DomainModel domain_model(const AtModel& m)
{
    DomainModel dm;
    dm.genus = m.circle().genus();
    for (auto& r : m.regions()) {
        DomainModelRegion dr;
        dr.basepoint = r.basepoint;
        dr.boundary_adjacent = r.boundary_adjacent;
        for (auto& [cid, ang] : r.corners) {
            int t = t_twelfths(ang);
            dr.euler_twelfths += t;
            if (cid < 0) dr.boundary_twelfths += t;
        }
        dm.regions.push_back(dr);
    }
    for (auto& cr : m.crossings()) {
        DomainModelVertex v;
        v.region = cr.sector_region;
        for (int k = 0; k < 4; ++k) v.sign[k] = cr.sector_angle[k] == 60 ? 1 : -1;
        v.fam_a = cr.fam_a;
        v.fam_b = cr.fam_b;
        dm.vertices.push_back(v);
    }
    return dm;
}

Rat euler_measure(const DomainModel& m, const Domain& d)
{
    if (d.multiplicities.size() != m.regions.size())
        fail(errc::bad_input, "multiplicity vector size mismatch");
    Rat e(0);
    for (size_t r = 0; r < m.regions.size(); ++r) {
        if (d.multiplicities[r] == 0) continue;
        if (m.regions[r].basepoint)
            fail(errc::basepoint_region_touched, "measure undefined on the basepoint region");
        e += Rat(d.multiplicities[r]) * Rat(m.regions[r].euler_twelfths, 12);
    }
    return e;
}

Rat euler_measure_interior_corners_only(const DomainModel& m, const Domain& d)
{
    Rat e(0);
    for (size_t r = 0; r < m.regions.size(); ++r) {
        if (d.multiplicities[r] == 0) continue;
        int tw = m.regions[r].euler_twelfths - m.regions[r].boundary_twelfths;
        e += Rat(d.multiplicities[r]) * Rat(tw, 12);
    }
    return e;
}

int boundary_weight(const DomainModel& m, const Domain& d)
{
    int w = 0;
    for (size_t r = 0; r < m.regions.size(); ++r)
        if (m.regions[r].boundary_adjacent) w += d.multiplicities[r];
    return w;
}

Rat polygon_index(int g, int n, const Rat& chi_s, const Rat& e_b, int m)
{
    if (n < 2) fail(errc::bad_input, "polygon index needs n >= 2");
    return Rat(3 - n, 2) * Rat(g) - chi_s + Rat(2) * e_b + Rat(m);
}

namespace {

struct Equation {
    std::vector<std::pair<int, int>> coeff; // (region, coefficient), merged
    int rhs = 0;
};

std::vector<Equation> build_equations(const DomainModel& m, const CornerPattern& p)
{
    auto check_pattern = [&](int idx, Family fa, Family fb, const char* name) {
        if (idx < 0 || idx >= (int)m.vertices.size())
            fail(errc::pattern_invalid, std::string(name) + " corner is not a vertex");
        if (m.vertices[idx].fam_a != fa || m.vertices[idx].fam_b != fb)
            fail(errc::pattern_invalid,
                 std::string(name) + " corner is not an intersection of the named families");
    };
    check_pattern(p.gd, Family::gamma, Family::delta, "gamma-delta");
    check_pattern(p.de, Family::delta, Family::epsilon, "delta-epsilon");
    check_pattern(p.ge, Family::gamma, Family::epsilon, "gamma-epsilon");
    std::vector<Equation> eqs;
    for (int v = 0; v < (int)m.vertices.size(); ++v) {
        Equation eq;
        eq.rhs = (v == p.gd || v == p.de || v == p.ge) ? 1 : 0;
        std::map<int, int> c;
        for (int k = 0; k < 4; ++k) c[m.vertices[v].region[k]] += m.vertices[v].sign[k];
        for (auto& [r, co] : c)
            if (co != 0) eq.coeff.push_back({r, co});
        eqs.push_back(std::move(eq));
    }
    return eqs;
}

} // namespace

std::vector<Domain> enumerate_positive_triangle_domains(const DomainModel& m,
                                                        const CornerPattern& p, int cap)
{
    auto eqs = build_equations(m, p);
    const int R = (int)m.regions.size();
    std::vector<int> state(R, -1);
    for (int r = 0; r < R; ++r)
        if (m.regions[r].basepoint) state[r] = 0;
    std::vector<Domain> out;

    // an equation with a single undetermined region forces its value
    auto propagate = [&](std::vector<int>& st, std::vector<int>& trail) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& eq : eqs) {
                int unknown = -1, ucoeff = 0, acc = 0, nunknown = 0;
                for (auto& [r, co] : eq.coeff) {
                    if (st[r] < 0) {
                        ++nunknown;
                        unknown = r;
                        ucoeff = co;
                    } else {
                        acc += co * st[r];
                    }
                }
                if (nunknown == 0) {
                    if (acc != eq.rhs) return false;
                } else if (nunknown == 1) {
                    int num = eq.rhs - acc;
                    if (num % ucoeff != 0) return false;
                    int val = num / ucoeff;
                    if (val < 0 || val > cap) return false;
                    st[unknown] = val;
                    trail.push_back(unknown);
                    progress = true;
                }
            }
        }
        return true;
    };

    std::function<void(std::vector<int>&)> search = [&](std::vector<int>& st) {
        std::vector<int> trail;
        if (!propagate(st, trail)) {
            for (int r : trail) st[r] = -1;
            return;
        }
        int branch = -1;
        for (auto& eq : eqs) {
            for (auto& [r, co] : eq.coeff)
                if (st[r] < 0) {
                    branch = r;
                    break;
                }
            if (branch >= 0) break;
        }
        if (branch < 0)
            for (int r = 0; r < R; ++r)
                if (st[r] < 0) {
                    branch = r;
                    break;
                }
        if (branch < 0) {
            Domain d;
            d.multiplicities = st;
            d.pattern = p;
            out.push_back(std::move(d));
        } else {
            for (int val = 0; val <= cap; ++val) {
                st[branch] = val;
                search(st);
            }
            st[branch] = -1;
        }
        for (int r : trail) st[r] = -1;
    };
    search(state);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Domain> enumerate_positive_triangle_domains_bruteforce(const DomainModel& m,
                                                                   const CornerPattern& p,
                                                                   int cap)
{
    auto eqs = build_equations(m, p);
    const int R = (int)m.regions.size();
    std::vector<std::vector<int>> closing_at(R);
    for (int e = 0; e < (int)eqs.size(); ++e) {
        int last = -1;
        for (auto& [r, co] : eqs[e].coeff) last = std::max(last, r);
        if (last >= 0) closing_at[last].push_back(e);
    }
    std::vector<int> mult(R, 0);
    std::vector<Domain> out;
    std::function<void(int)> rec = [&](int r) {
        if (r == R) {
            Domain d;
            d.multiplicities = mult;
            d.pattern = p;
            out.push_back(std::move(d));
            return;
        }
        int hi = m.regions[r].basepoint ? 0 : cap;
        for (int v = 0; v <= hi; ++v) {
            mult[r] = v;
            bool ok = true;
            for (int e : closing_at[r]) {
                int acc = 0;
                for (auto& [reg, co] : eqs[e].coeff) acc += co * mult[reg];
                if (acc != eqs[e].rhs) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(r + 1);
        }
        mult[r] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

TriangleLemmaReport verify_triangle_lemma(const DomainModel& m, int cap)
{
    TriangleLemmaReport rep;
    rep.cap = cap;
    std::vector<int> gd, de, ge;
    for (int v = 0; v < (int)m.vertices.size(); ++v) {
        const auto& vx = m.vertices[v];
        if (vx.fam_a == Family::gamma && vx.fam_b == Family::delta) gd.push_back(v);
        if (vx.fam_a == Family::delta && vx.fam_b == Family::epsilon) de.push_back(v);
        if (vx.fam_a == Family::gamma && vx.fam_b == Family::epsilon) ge.push_back(v);
    }
    const Rat target(m.genus, 4);
    for (int a : gd)
        for (int b : de)
            for (int c : ge) {
                CornerPattern p{a, b, c};
                ++rep.patterns_checked;
                for (auto& d : enumerate_positive_triangle_domains(m, p, cap)) {
                    ++rep.domains_checked;
                    Rat e = euler_measure(m, d);
                    if (boundary_weight(m, d) > 0) ++rep.boundary_touching;
                    if (e != target) {
                        rep.all_euler_g_over_4 = false;
                        if (!rep.witness) {
                            rep.witness = d;
                            rep.witness_euler = e;
                        }
                    }
                }
            }
    return rep;
}

} // namespace bf
