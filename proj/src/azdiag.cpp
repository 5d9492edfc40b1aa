#include "borfloer/azdiag.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "borfloer/errors.hpp"

namespace bf {

const char* family_name(Family f)
{
    switch (f) {
    case Family::alpha: return "alpha";
    case Family::beta: return "beta";
    case Family::gamma: return "gamma";
    case Family::delta: return "delta";
    case Family::epsilon: return "epsilon";
    case Family::boundary: return "boundary";
    }
    return "?";
}

AzModel::AzModel(const PointedMatchedCircle& z) : z_(z)
{
    const int n = z.points();
    for (int s = 1; s <= n; ++s)
        for (int t = s; t <= n; ++t) {
            if (s == t && z.partner(s) < s) continue; // pair point kept at the smaller point
            gen_points_.push_back({s, t});
        }

    // Region census: unit cells (a,b) with a+b <= n-1 and diagonal half-cells
    // F_m (m = 0..n), merged by the matching gluings and the basepoint handle.
    std::map<std::pair<int, int>, int> cell_id;
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a <= n - 1; ++a)
        for (int b = 0; a + b <= n - 1; ++b) {
            cell_id[{a, b}] = (int)cells.size();
            cells.push_back({a, b});
        }
    const int nf = n + 1; // F_0..F_n
    const int total = (int)cells.size() + nf;
    std::vector<int> uf(total);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    auto fid = [&](int m) { return (int)cells.size() + m; };
    for (int pid = 1; pid <= z.num_pairs(); ++pid) {
        auto [i, j] = z.pair_points(pid);
        unite(fid(i - 1), fid(j));
        unite(fid(i), fid(j - 1));
    }
    if (n > 0) unite(fid(n), cell_id[{0, 0}]); // basepoint handle at {(0,0),(T,0)}

    std::map<int, int> rep_to_region;
    auto region_of = [&](int id) {
        int r = find(id);
        auto it = rep_to_region.find(r);
        if (it == rep_to_region.end()) {
            it = rep_to_region.emplace(r, (int)regions_.size()).first;
            regions_.push_back({});
        }
        return it->second;
    };
    for (int c = 0; c < (int)cells.size(); ++c) {
        auto& reg = regions_[region_of(c)];
        reg.cells.push_back(cells[c]);
        reg.corner_count += 4;
    }
    for (int m = 0; m < nf; ++m) {
        auto& reg = regions_[region_of(fid(m))];
        reg.diag_faces.push_back(m);
        reg.corner_count += 3;
    }
    // Each pair gluing fuses two 45+45 corner pairs into two 90 corners.
    for (int pid = 1; pid <= z.num_pairs(); ++pid)
        regions_[region_of(fid(z.pair_points(pid).first))].corner_count -= 2;
    int bp = region_of(fid(n));
    regions_[bp].basepoint = true;
    for (int m = 0; m < nf; ++m)
        if (region_of(fid(m)) != bp)
            fail(errc::invalid_circle, "diagonal faces split into several classes");
    std::sort(regions_.begin(), regions_.end(), [](const AzRegion& a, const AzRegion& b) {
        auto key = [](const AzRegion& r) {
            return std::tuple(r.basepoint ? 1 : 0,
                              r.cells.empty() ? std::pair(1 << 20, 0) : r.cells.front());
        };
        return key(a) < key(b);
    });
}

bool AzModel::vertex_exists(const AzVertex& v) const
{
    const int n = z_.points();
    if (v.s < 1 || v.t > n || v.s > v.t) return false;
    if (v.s == v.t && z_.partner(v.s) < v.s) return false;
    return true;
}

StrandTerm AzModel::to_strand(const DiagramGenerator& x) const
{
    StrandTerm t;
    for (auto& p : x.points) {
        if (p.is_pair_point())
            t.horizontals.push_back(z_.pair_of(p.s));
        else
            t.chords.push_back({p.s, p.t});
    }
    std::sort(t.chords.begin(), t.chords.end());
    std::sort(t.horizontals.begin(), t.horizontals.end());
    return t;
}

DiagramGenerator AzModel::from_strand(const StrandTerm& t) const
{
    DiagramGenerator g;
    for (auto& c : t.chords) g.points.push_back({c.start, c.end});
    for (int h : t.horizontals) {
        auto [i, j] = z_.pair_points(h);
        g.points.push_back({i, i});
    }
    std::sort(g.points.begin(), g.points.end());
    return g;
}

std::vector<DiagramGenerator> AzModel::generators() const
{
    std::vector<DiagramGenerator> out;
    std::vector<AzVertex> cur;
    unsigned amask = 0, bmask = 0;
    std::function<void(size_t)> rec = [&](size_t from) {
        DiagramGenerator g;
        g.points = cur;
        std::sort(g.points.begin(), g.points.end());
        out.push_back(std::move(g));
        for (size_t i = from; i < gen_points_.size(); ++i) {
            auto& v = gen_points_[i];
            unsigned a = 1u << (z_.pair_of(v.t) - 1);
            unsigned b = 1u << (z_.pair_of(v.s) - 1);
            if ((amask & a) || (bmask & b)) continue;
            cur.push_back(v);
            amask |= a;
            bmask |= b;
            rec(i + 1);
            cur.pop_back();
            amask &= ~a;
            bmask &= ~b;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void toggle(GeneratorSum& sum, DiagramGenerator y)
{
    auto it = sum.find(y);
    if (it == sum.end())
        sum.insert(std::move(y));
    else
        sum.erase(it);
}

// Glued two-stage path; pairwise double crossings kill a count.
struct Path {
    int a, m, e;
};

bool double_cross(const Path& p, const Path& q)
{
    long long d1 = (long long)(p.a - q.a) * (p.m - q.m);
    long long d2 = (long long)(p.m - q.m) * (p.e - q.e);
    return d1 < 0 && d2 < 0;
}

} // namespace

GeneratorSum AzModel::differential(const DiagramGenerator& x) const
{
    GeneratorSum out;
    const auto& pts = x.points;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            const AzVertex& p = pts[i];
            if (p.is_pair_point()) continue; // southwest corner is always interior
            const AzVertex& q = pts[j];
            // a pair point is hit at either of its two diagonal positions
            std::vector<std::pair<int, int>> q_readings;
            if (q.is_pair_point()) {
                q_readings.push_back({q.s, q.s});
                q_readings.push_back({z_.partner(q.s), z_.partner(q.s)});
            } else {
                q_readings.push_back({q.s, q.t});
            }
            for (auto [qs, qt] : q_readings) {
                if (!(p.s < qs && p.t > qt)) continue;
                bool empty = true;
                for (auto& r : pts) {
                    if (&r == &p || &r == &q) continue;
                    if (r.is_pair_point()) continue; // never interior to a rectangle
                    if (p.s < r.s && r.s < qs && qt < r.t && r.t < p.t) empty = false;
                }
                if (!empty) continue;
                DiagramGenerator y;
                for (auto& r : pts)
                    if (!(&r == &p) && !(&r == &q)) y.points.push_back(r);
                y.points.push_back({p.s, qt});
                y.points.push_back({qs, p.t});
                std::sort(y.points.begin(), y.points.end());
                toggle(out, std::move(y));
            }
        }
    return out;
}

GeneratorSum AzModel::action_left(const StrandTerm& a, const DiagramGenerator& x) const
{
    GeneratorSum out;
    if (a.weight() != x.size()) return out;
    const auto& z = z_;
    std::vector<char> used(x.points.size(), 0);
    std::vector<Path> paths;
    struct Move {
        int c, t; // replacement point
        size_t idx;
    };
    std::vector<Move> moves;
    for (auto& ch : a.chords) {
        int found = -1, lit_t = 0;
        for (size_t i = 0; i < x.points.size(); ++i) {
            if (used[i]) continue;
            const AzVertex& p = x.points[i];
            if (p.is_pair_point()) {
                if (z.pair_of(p.s) == z.pair_of(ch.end)) {
                    found = (int)i;
                    lit_t = ch.end;
                }
            } else if (p.s == ch.end) {
                found = (int)i;
                lit_t = p.t;
            }
        }
        if (found < 0) return out;
        used[found] = 1;
        moves.push_back({ch.start, lit_t, (size_t)found});
        paths.push_back({ch.start, ch.end, lit_t});
    }
    for (int h : a.horizontals) {
        int found = -1;
        for (size_t i = 0; i < x.points.size(); ++i) {
            if (used[i]) continue;
            if (z.pair_of(x.points[i].s) == h) found = (int)i;
        }
        if (found < 0) return out;
        used[found] = 1;
        const AzVertex& p = x.points[found];
        if (!p.is_pair_point()) paths.push_back({p.s, p.s, p.t});
    }
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i + 1; j < paths.size(); ++j)
            if (double_cross(paths[i], paths[j])) return out;
    DiagramGenerator y;
    std::vector<char> moved(x.points.size(), 0);
    for (auto& mv : moves) moved[mv.idx] = 1;
    for (size_t i = 0; i < x.points.size(); ++i)
        if (!moved[i]) y.points.push_back(x.points[i]);
    for (auto& mv : moves) y.points.push_back({mv.c, mv.t});
    std::sort(y.points.begin(), y.points.end());
    out.insert(std::move(y));
    return out;
}

GeneratorSum AzModel::action_right(const DiagramGenerator& x, const StrandTerm& b) const
{
    GeneratorSum out;
    if (b.weight() != x.size()) return out;
    const auto& z = z_;
    std::vector<char> used(x.points.size(), 0);
    std::vector<Path> paths;
    struct Move {
        int u, t;
        size_t idx;
    };
    std::vector<Move> moves;
    for (auto& ch : b.chords) {
        int found = -1, lit_u = 0;
        for (size_t i = 0; i < x.points.size(); ++i) {
            if (used[i]) continue;
            const AzVertex& p = x.points[i];
            if (p.is_pair_point()) {
                if (z.pair_of(p.t) == z.pair_of(ch.start)) {
                    found = (int)i;
                    lit_u = ch.start;
                }
            } else if (p.t == ch.start) {
                found = (int)i;
                lit_u = p.s;
            }
        }
        if (found < 0) return out;
        used[found] = 1;
        moves.push_back({lit_u, ch.end, (size_t)found});
        paths.push_back({lit_u, ch.start, ch.end});
    }
    for (int h : b.horizontals) {
        int found = -1;
        for (size_t i = 0; i < x.points.size(); ++i) {
            if (used[i]) continue;
            if (z.pair_of(x.points[i].t) == h) found = (int)i;
        }
        if (found < 0) return out;
        used[found] = 1;
        const AzVertex& p = x.points[found];
        if (!p.is_pair_point()) paths.push_back({p.s, p.t, p.t});
    }
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i + 1; j < paths.size(); ++j)
            if (double_cross(paths[i], paths[j])) return out;
    DiagramGenerator y;
    std::vector<char> moved(x.points.size(), 0);
    for (auto& mv : moves) moved[mv.idx] = 1;
    for (size_t i = 0; i < x.points.size(); ++i)
        if (!moved[i]) y.points.push_back(x.points[i]);
    for (auto& mv : moves) y.points.push_back({mv.u, mv.t});
    std::sort(y.points.begin(), y.points.end());
    out.insert(std::move(y));
    return out;
}

AzModel build_az(const PointedMatchedCircle& z) { return AzModel(z); }

} // namespace bf
