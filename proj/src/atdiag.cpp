#include "borfloer/atdiag.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "borfloer/errors.hpp"

namespace bf {

namespace {

constexpr int TAG_BOTTOM = 1;
constexpr int TAG_RIGHT = 2;
constexpr int TAG_TOP = 3;
constexpr int TAG_LEFT = 4;
constexpr int TAG_CHAMFER_BL = 5;  // at (0,0), glued to BRa
constexpr int TAG_CHAMFER_BRa = 6; // (T-c,0)..M
constexpr int TAG_CHAMFER_BRb = 7; // M..(T,c), glued to TR
constexpr int TAG_CHAMFER_TR = 8;

const Rat kZone(1, 16);    // half-width of a gluing zone on the top edge
const Rat kChamfer(1, 64); // corner chamfer size

int theta(Family f)
{
    switch (f) {
    case Family::gamma: return 30;
    case Family::delta: return 90;
    case Family::epsilon: return 150;
    default: return 0;
    }
}

Rat dotr(const RatPoint& a, const RatPoint& b) { return a.x * b.x + a.y * b.y; }

} // namespace

AtModel::AtModel(const PointedMatchedCircle& z, const AtOffsets& off)
    : z_(z), zrev_(z.reverse_orientation()), off_(off)
{
    const int n = z.points();
    const Rat T(4 * z.genus() + 1);
    if (off.g_base.sign() <= 0 || off.e_extra.sign() <= 0)
        fail(errc::degenerate_offsets, "offsets must be positive to resolve triple points");
    auto gsh = [&](int m) { return Rat(m) * off.g_base; };
    auto esh = [&](int m) { return Rat(m) * off.g_base + off.e_extra; };
    if (n > 0 && !(esh(n) < kZone / Rat(4)))
        fail(errc::degenerate_offsets, "offsets too large for the gluing zones");

    std::vector<ArrSegment> segs;
    auto add = [&](RatPoint a, RatPoint b, Family f, int line, int pair, int tag) {
        segs.push_back({a, b, f, line, pair, tag});
    };

    const Rat c = kChamfer;
    add({c, 0}, {T - c, 0}, Family::boundary, 0, 0, TAG_BOTTOM);
    add({T, c}, {T, T - c}, Family::boundary, 0, 0, TAG_RIGHT);
    add({0, c}, {0, T}, Family::boundary, 0, 0, TAG_LEFT);
    add({0, c}, {c, 0}, Family::boundary, 0, 0, TAG_CHAMFER_BL);
    const RatPoint M{T - c / Rat(2), c / Rat(2)};
    add({T - c, 0}, M, Family::boundary, 0, 0, TAG_CHAMFER_BRa);
    add(M, {T, c}, Family::boundary, 0, 0, TAG_CHAMFER_BRb);
    add({T - c, T}, {T, T - c}, Family::boundary, 0, 0, TAG_CHAMFER_TR);
    {
        std::vector<Rat> marks;
        marks.push_back(Rat(0));
        for (int m = 1; m <= n; ++m) {
            marks.push_back(Rat(m) - kZone);
            marks.push_back(Rat(m) + kZone);
        }
        marks.push_back(T - c);
        for (size_t i = 0; i + 1 < marks.size(); ++i)
            add({marks[i], T}, {marks[i + 1], T}, Family::boundary, 0, 0, TAG_TOP);
    }

    for (int m = 1; m <= n; ++m) {
        const int p = z.partner(m);
        const int pair = z.pair_of(m);
        add({Rat(m), 0}, {Rat(m), T}, Family::delta, m, pair, 0);
        const Rat A = Rat(m) + gsh(m);
        if (m < p) {
            add({0, T - A}, {A, T}, Family::gamma, m, pair, 0);
        } else {
            const Rat H = Rat(2) * gsh(m);
            const RatPoint elbow{A - H, T - H};
            add({0, T - A}, elbow, Family::gamma, m, pair, 0);
            add(elbow, {Rat(m) - gsh(p), T}, Family::gamma, m, pair, 0);
        }
        const Rat B = Rat(m) + esh(m);
        if (m > p) {
            add({T, B}, {B, T}, Family::epsilon, m, pair, 0);
        } else {
            const Rat H = Rat(2) * esh(m);
            const RatPoint elbow{B + H, T - H};
            add({T, B}, elbow, Family::epsilon, m, pair, 0);
            add(elbow, {Rat(m) - esh(p), T}, Family::epsilon, m, pair, 0);
        }
    }

    arr_.emplace(std::move(segs));
    const Arrangement& arr = *arr_;

    // ---- seam pairing ----
    auto zone_of = [&](const Rat& x) -> int {
        for (int m = 1; m <= n; ++m)
            if (Rat(m) - kZone < x && x < Rat(m) + kZone) return m;
        return 0;
    };
    struct Seam {
        int edge_a, edge_b;
    };
    std::vector<Seam> seams;
    std::vector<char> seam_edge(arr.edges().size(), 0);
    {
        std::map<std::pair<RatPoint, RatPoint>, int> top_edges;
        for (int e = 0; e < (int)arr.edges().size(); ++e) {
            const auto& seg = arr.segments()[arr.edges()[e].seg];
            if (seg.family != Family::boundary || seg.tag != TAG_TOP) continue;
            RatPoint a = arr.vertices()[arr.edges()[e].v[0]].p;
            RatPoint b = arr.vertices()[arr.edges()[e].v[1]].p;
            if (b < a) std::swap(a, b);
            top_edges[{a, b}] = e;
        }
        for (auto& [pq, e] : top_edges) {
            if (seam_edge[e]) continue;
            Rat mid = (pq.first.x + pq.second.x) / Rat(2);
            int m = zone_of(mid);
            if (m == 0) continue;
            Rat s = Rat(m + z.partner(m));
            RatPoint ga{s - pq.second.x, T}, gb{s - pq.first.x, T};
            auto it = top_edges.find({ga, gb});
            if (it == top_edges.end())
                fail(errc::degenerate_offsets, "gluing zones do not mirror");
            seams.push_back({e, it->second});
            seam_edge[e] = seam_edge[it->second] = 1;
        }
    }
    {
        int bl = -1, bra = -1, brb = -1, tr = -1;
        for (int e = 0; e < (int)arr.edges().size(); ++e) {
            int tag = arr.segments()[arr.edges()[e].seg].tag;
            if (tag == TAG_CHAMFER_BL) bl = e;
            if (tag == TAG_CHAMFER_BRa) bra = e;
            if (tag == TAG_CHAMFER_BRb) brb = e;
            if (tag == TAG_CHAMFER_TR) tr = e;
        }
        seams.push_back({bl, bra});
        seams.push_back({tr, brb});
        seam_edge[bl] = seam_edge[bra] = seam_edge[brb] = seam_edge[tr] = 1;
    }

    // ---- quotient faces, tracking Euler characteristics ----
    const int nf = arr.num_faces();
    std::vector<int> uf(nf);
    std::iota(uf.begin(), uf.end(), 0);
    std::vector<int> chi(nf, 1);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    auto interior_face = [&](int e) {
        int f0 = arr.edges()[e].face[0], f1 = arr.edges()[e].face[1];
        return f0 == arr.outer_face() ? f1 : f0;
    };
    std::vector<int> basepoint_faces;
    for (size_t si = 0; si < seams.size(); ++si) {
        int fa = find(interior_face(seams[si].edge_a));
        int fb = find(interior_face(seams[si].edge_b));
        if (si >= seams.size() - 2) {
            basepoint_faces.push_back(interior_face(seams[si].edge_a));
            basepoint_faces.push_back(interior_face(seams[si].edge_b));
        }
        if (fa == fb) {
            chi[fa] -= 1;
        } else {
            int merged = chi[fa] + chi[fb] - 1;
            uf[fa] = fb;
            chi[fb] = merged;
        }
    }

    std::map<int, int> class_to_region;
    auto region_of_face = [&](int f) {
        int r = find(f);
        auto it = class_to_region.find(r);
        if (it == class_to_region.end()) {
            it = class_to_region.emplace(r, (int)regions_.size()).first;
            regions_.push_back({});
            regions_.back().chi = chi[r];
        }
        return it->second;
    };
    for (int f = 0; f < nf; ++f)
        if (f != arr.outer_face()) region_of_face(f);
    for (int f : basepoint_faces) regions_[region_of_face(f)].basepoint = true;

    for (int e = 0; e < (int)arr.edges().size(); ++e) {
        const auto& seg = arr.segments()[arr.edges()[e].seg];
        if (seg.family != Family::boundary || seam_edge[e]) continue;
        regions_[region_of_face(interior_face(e))].boundary_adjacent = true;
    }

    // ---- crossings ----
    std::map<int, int> crossing_id;
    for (int v = 0; v < (int)arr.vertices().size(); ++v) {
        const auto& out = arr.vertices()[v].out;
        std::set<std::pair<Family, int>> strand_keys;
        bool has_boundary = false;
        for (int h : out) {
            const auto& seg = arr.segments()[arr.he_seg(h)];
            if (seg.family == Family::boundary)
                has_boundary = true;
            else
                strand_keys.insert({seg.family, seg.line});
        }
        if (strand_keys.size() > 2)
            fail(errc::degenerate_offsets, "unresolved triple point");
        if (strand_keys.size() == 2 && !has_boundary) {
            if (out.size() != 4) fail(errc::degenerate_offsets, "tangential crossing");
            auto it = strand_keys.begin();
            auto ka = *it++;
            auto kb = *it;
            AtCrossing cr;
            cr.pos = arr.vertices()[v].p;
            cr.fam_a = ka.first;
            cr.line_a = ka.second;
            cr.fam_b = kb.first;
            cr.line_b = kb.second;
            cr.pair_point = (ka.second == kb.second);
            crossing_id[v] = (int)crossings_.size();
            crossings_.push_back(cr);
        }
    }

    // ---- region corners ----
    for (int v = 0; v < (int)arr.vertices().size(); ++v) {
        const auto& out = arr.vertices()[v].out;
        const size_t deg = out.size();
        if (deg < 2) continue;
        for (size_t k = 0; k < deg; ++k) {
            int h1 = out[k], h2 = out[(k + 1) % deg];
            int face = arr.he_face(h1);
            if (face == arr.outer_face()) continue;
            const auto& s1 = arr.segments()[arr.he_seg(h1)];
            const auto& s2 = arr.segments()[arr.he_seg(h2)];
            bool b1 = s1.family == Family::boundary, b2 = s2.family == Family::boundary;
            if ((b1 && seam_edge[h1 / 2]) || (b2 && seam_edge[h2 / 2]))
                continue; // smooth after gluing, or basepoint-internal
            int region = region_of_face(face);
            auto& corners = regions_[region].corners;
            if (!b1 && !b2) {
                if (s1.family == s2.family && s1.line == s2.line) continue; // elbow joint
                if (s1.family == s2.family)
                    fail(errc::degenerate_offsets, "same-family crossing");
                int ang = ((theta(s2.family) - theta(s1.family)) % 180 + 180) % 180;
                auto itc = crossing_id.find(v);
                corners.push_back({itc == crossing_id.end() ? -1 : itc->second, ang});
            } else if (b1 != b2) {
                Family fam = b1 ? s2.family : s1.family;
                int ang;
                if (fam == Family::delta) {
                    ang = 90;
                } else {
                    bool acute = dotr(arr.he_dir(h1), arr.he_dir(h2)) > Rat(0);
                    if (fam == Family::gamma)
                        ang = acute ? 60 : 120;
                    else
                        ang = acute ? 30 : 150;
                }
                corners.push_back({-1, ang});
            } else {
                RatPoint d1 = arr.he_dir(h1), d2 = arr.he_dir(h2);
                if (d1.x * d2.y - d1.y * d2.x == Rat(0)) continue; // straight through
                corners.push_back({-1, 90}); // the (0,T) square corner
            }
        }
    }

    // sector tables
    for (auto& [v, cid] : crossing_id) {
        auto& cr = crossings_[cid];
        const auto& out = arr.vertices()[v].out;
        for (int k = 0; k < 4; ++k) {
            const auto& s1 = arr.segments()[arr.he_seg(out[k])];
            const auto& s2 = arr.segments()[arr.he_seg(out[(k + 1) % 4])];
            cr.sector_region[k] = region_of_face(arr.he_face(out[k]));
            cr.sector_angle[k] = ((theta(s2.family) - theta(s1.family)) % 180 + 180) % 180;
        }
        if (cr.sector_angle[0] + cr.sector_angle[1] != 180 ||
            cr.sector_angle[0] != cr.sector_angle[2] || cr.sector_angle[1] != cr.sector_angle[3])
            fail(errc::degenerate_offsets, "crossing sectors not alternating");
    }

    // region areas (diagnostic)
    for (int f = 0; f < nf; ++f) {
        if (f == arr.outer_face()) continue;
        Rat area(0);
        for (int h : arr.face_orbits()[f]) {
            const RatPoint& p = arr.vertices()[arr.he_tail(h)].p;
            const RatPoint& q = arr.vertices()[arr.he_head(h)].p;
            area += p.x * q.y - q.x * p.y;
        }
        regions_[region_of_face(f)].area += area / Rat(2);
    }

    // ---- boundary components ----
    {
        std::map<RatPoint, int> bid;
        std::vector<int> buf;
        std::function<int(int)> bfind = [&](int x) {
            return buf[x] == x ? x : buf[x] = bfind(buf[x]);
        };
        auto bvert = [&](const RatPoint& p) {
            auto it = bid.find(p);
            if (it == bid.end()) {
                it = bid.emplace(p, (int)buf.size()).first;
                buf.push_back((int)buf.size());
            }
            return it->second;
        };
        auto bunion = [&](int a, int b) { buf[bfind(a)] = bfind(b); };
        for (int m = 1; m <= n; ++m) {
            int p = z.partner(m);
            if (p < m) continue;
            bunion(bvert({Rat(m) - kZone, T}), bvert({Rat(p) + kZone, T}));
            bunion(bvert({Rat(m) + kZone, T}), bvert({Rat(p) - kZone, T}));
        }
        bunion(bvert({c, 0}), bvert({T - c, 0}));
        bunion(bvert({Rat(0), c}), bvert(M));
        bunion(bvert({T, T - c}), bvert({T, c}));
        bunion(bvert({T - c, T}), bvert(M));
        for (int e = 0; e < (int)arr.edges().size(); ++e) {
            const auto& seg = arr.segments()[arr.edges()[e].seg];
            if (seg.family != Family::boundary || seam_edge[e]) continue;
            bunion(bvert(arr.vertices()[arr.edges()[e].v[0]].p),
                   bvert(arr.vertices()[arr.edges()[e].v[1]].p));
        }
        std::set<int> comps;
        for (int e = 0; e < (int)arr.edges().size(); ++e) {
            const auto& seg = arr.segments()[arr.edges()[e].seg];
            if (seg.family != Family::boundary || seam_edge[e]) continue;
            comps.insert(bfind(bvert(arr.vertices()[arr.edges()[e].v[0]].p)));
        }
        boundary_components_ = (int)comps.size();
    }

    // one boundary-type point per pair on each face diagram
    for (AtFace f : {AtFace::gamma_delta, AtFace::delta_epsilon, AtFace::gamma_epsilon}) {
        std::map<int, int> per_pair;
        for (int idx : face_points(f))
            if (crossings_[idx].pair_point) ++per_pair[z.pair_of(crossings_[idx].line_a)];
        if ((int)per_pair.size() != z.num_pairs())
            fail(errc::degenerate_offsets, "missing boundary-type generator point");
        for (auto& [p, cnt] : per_pair)
            if (cnt != 1) fail(errc::degenerate_offsets, "duplicated boundary-type point");
    }
}

std::vector<int> AtModel::face_points(AtFace f) const
{
    Family fa = f == AtFace::delta_epsilon ? Family::delta : Family::gamma;
    Family fb = f == AtFace::gamma_delta ? Family::delta : Family::epsilon;
    std::vector<int> out;
    for (int i = 0; i < (int)crossings_.size(); ++i)
        if (crossings_[i].fam_a == fa && crossings_[i].fam_b == fb) out.push_back(i);
    return out;
}

bool AtModel::generator_on_face(const AtGenerator& g, AtFace f) const
{
    Family fa = f == AtFace::delta_epsilon ? Family::delta : Family::gamma;
    Family fb = f == AtFace::gamma_delta ? Family::delta : Family::epsilon;
    for (int idx : g.points) {
        if (idx < 0 || idx >= (int)crossings_.size()) return false;
        if (crossings_[idx].fam_a != fa || crossings_[idx].fam_b != fb) return false;
    }
    return true;
}

std::vector<AtGenerator> AtModel::face_generators(AtFace f) const
{
    auto pts = face_points(f);
    std::vector<AtGenerator> out;
    std::vector<int> cur;
    unsigned amask = 0, bmask = 0;
    std::function<void(size_t)> rec = [&](size_t from) {
        AtGenerator g;
        g.points = cur;
        std::sort(g.points.begin(), g.points.end());
        out.push_back(std::move(g));
        for (size_t i = from; i < pts.size(); ++i) {
            const auto& cr = crossings_[pts[i]];
            unsigned a = 1u << (z_.pair_of(cr.line_a) - 1);
            unsigned b = 1u << (z_.pair_of(cr.line_b) - 1);
            if ((amask & a) || (bmask & b)) continue;
            cur.push_back(pts[i]);
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

StrandTerm AtModel::to_strand(AtFace f, const AtGenerator& g) const
{
    if (!generator_on_face(g, f)) fail(errc::face_mismatch, "generator not on face");
    StrandTerm t;
    for (int idx : g.points) {
        const auto& cr = crossings_[idx];
        if (cr.pair_point) {
            t.horizontals.push_back(zrev_.pair_of(rev(cr.line_a)));
            continue;
        }
        int s = rev(cr.line_a), e = rev(cr.line_b);
        if (!(s < e)) fail(errc::face_mismatch, "crossing outside its face range");
        t.chords.push_back({s, e});
    }
    std::sort(t.chords.begin(), t.chords.end());
    std::sort(t.horizontals.begin(), t.horizontals.end());
    return t;
}

AtGenerator AtModel::from_strand(AtFace f, const StrandTerm& t) const
{
    Family fa = f == AtFace::delta_epsilon ? Family::delta : Family::gamma;
    Family fb = f == AtFace::gamma_delta ? Family::delta : Family::epsilon;
    AtGenerator g;
    auto find_point = [&](bool pair_point, int la, int lb) {
        for (int k = 0; k < (int)crossings_.size(); ++k) {
            const auto& cr = crossings_[k];
            if (cr.fam_a != fa || cr.fam_b != fb || cr.pair_point != pair_point) continue;
            if (pair_point ? cr.line_a == la : (cr.line_a == la && cr.line_b == lb)) return k;
        }
        fail(errc::face_mismatch, "no model point for strand item");
    };
    for (auto& ch : t.chords) g.points.push_back(find_point(false, rev(ch.start), rev(ch.end)));
    for (int h : t.horizontals) {
        auto [i, j] = zrev_.pair_points(h);
        g.points.push_back(find_point(true, std::min(rev(i), rev(j)), 0));
    }
    std::sort(g.points.begin(), g.points.end());
    return g;
}

AtGeneratorSum AtModel::triangle_product(const AtGenerator& x, const AtGenerator& y) const
{
    if (!generator_on_face(x, AtFace::gamma_delta) ||
        !generator_on_face(y, AtFace::delta_epsilon))
        fail(errc::face_mismatch,
             "triangle product wants a gamma-delta and a delta-epsilon generator");
    struct Item {
        std::vector<std::pair<int, int>> flavors; // (first literal, second literal)
    };
    auto items_of = [&](const AtGenerator& g) {
        std::vector<Item> items;
        for (int idx : g.points) {
            const auto& cr = crossings_[idx];
            Item it;
            if (cr.pair_point) {
                int i = cr.line_a, j = z_.partner(i);
                it.flavors = {{i, i}, {j, j}};
            } else {
                it.flavors = {{cr.line_a, cr.line_b}};
            }
            items.push_back(std::move(it));
        }
        return items;
    };
    auto xi = items_of(x); // (gamma a, delta m)
    auto yi = items_of(y); // (delta m, epsilon b)
    if (xi.size() != yi.size()) return {};
    const size_t nx = xi.size();

    std::set<std::vector<std::pair<int, int>>> literal_outputs;
    std::vector<size_t> xflavor(nx, 0), yflavor(nx, 0);
    std::function<void(size_t)> choose = [&](size_t pos) {
        if (pos < nx) {
            for (size_t fx = 0; fx < xi[pos].flavors.size(); ++fx) {
                xflavor[pos] = fx;
                choose(pos + 1);
            }
            return;
        }
        if (pos < 2 * nx) {
            for (size_t fy = 0; fy < yi[pos - nx].flavors.size(); ++fy) {
                yflavor[pos - nx] = fy;
                choose(pos + 1);
            }
            return;
        }
        std::map<int, size_t> by_delta;
        for (size_t i = 0; i < nx; ++i)
            if (!by_delta.emplace(xi[i].flavors[xflavor[i]].second, i).second) return;
        std::vector<std::array<int, 3>> paths;
        for (size_t i = 0; i < nx; ++i) {
            auto [m, b] = yi[i].flavors[yflavor[i]];
            auto it = by_delta.find(m);
            if (it == by_delta.end()) return;
            paths.push_back({xi[it->second].flavors[xflavor[it->second]].first, m, b});
            by_delta.erase(it);
        }
        for (size_t i = 0; i < paths.size(); ++i)
            for (size_t j = i + 1; j < paths.size(); ++j) {
                long long d1 =
                    (long long)(paths[i][0] - paths[j][0]) * (paths[i][1] - paths[j][1]);
                long long d2 =
                    (long long)(paths[i][1] - paths[j][1]) * (paths[i][2] - paths[j][2]);
                if (d1 < 0 && d2 < 0) return; // double crossing
            }
        std::vector<std::pair<int, int>> out;
        for (auto& p : paths) {
            if (p[2] > p[0]) fail(errc::face_mismatch, "glued triangle not a triangle");
            out.push_back({p[0], p[2]});
        }
        std::sort(out.begin(), out.end());
        auto it = literal_outputs.find(out);
        if (it == literal_outputs.end())
            literal_outputs.insert(std::move(out));
        else
            literal_outputs.erase(it);
    };
    choose(0);

    AtGeneratorSum result;
    while (!literal_outputs.empty()) {
        auto lit = *literal_outputs.begin();
        std::vector<size_t> smeared;
        for (size_t i = 0; i < lit.size(); ++i)
            if (lit[i].first == lit[i].second) smeared.push_back(i);
        for (size_t mask = 0; mask < (size_t(1) << smeared.size()); ++mask) {
            auto variant = lit;
            for (size_t b = 0; b < smeared.size(); ++b) {
                int u = lit[smeared[b]].first;
                int v = (mask >> b) & 1 ? z_.partner(u) : u;
                variant[smeared[b]] = {v, v};
            }
            std::sort(variant.begin(), variant.end());
            auto it = literal_outputs.find(variant);
            if (it == literal_outputs.end())
                fail(errc::face_mismatch, "smeared triangle outputs failed to regroup");
            literal_outputs.erase(it);
        }
        AtGenerator g;
        for (auto [alpha, beta] : lit) {
            bool want_pair = alpha == beta;
            int la = want_pair ? std::min(alpha, z_.partner(alpha)) : alpha;
            bool found = false;
            for (int k = 0; k < (int)crossings_.size() && !found; ++k) {
                const auto& cr = crossings_[k];
                if (cr.fam_a != Family::gamma || cr.fam_b != Family::epsilon) continue;
                if (want_pair ? (cr.pair_point && cr.line_a == la)
                              : (!cr.pair_point && cr.line_a == alpha && cr.line_b == beta)) {
                    g.points.push_back(k);
                    found = true;
                }
            }
            if (!found) fail(errc::face_mismatch, "glued triangle output point missing");
        }
        std::sort(g.points.begin(), g.points.end());
        auto it = result.find(g);
        if (it == result.end())
            result.insert(std::move(g));
        else
            result.erase(it);
    }
    return result;
}

AtModel build_at(const PointedMatchedCircle& z, const AtOffsets& offsets)
{
    return AtModel(z, offsets);
}

} // namespace bf
