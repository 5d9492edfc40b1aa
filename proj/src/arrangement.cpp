#include "borfloer/arrangement.hpp"

#include <algorithm>
#include <map>

#include "borfloer/errors.hpp"

namespace bf {

namespace {

Rat cross(const RatPoint& o, const RatPoint& a, const RatPoint& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rat cross_dir(const RatPoint& a, const RatPoint& b) { return a.x * b.y - a.y * b.x; }
Rat dot_dir(const RatPoint& a, const RatPoint& b) { return a.x * b.x + a.y * b.y; }

bool on_segment(const ArrSegment& s, const RatPoint& p)
{
    if (cross(s.a, s.b, p) != Rat(0)) return false;
    Rat lo_x = std::min(s.a.x, s.b.x), hi_x = std::max(s.a.x, s.b.x);
    Rat lo_y = std::min(s.a.y, s.b.y), hi_y = std::max(s.a.y, s.b.y);
    return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
}

} // namespace

bool dir_less(const RatPoint& d1, const RatPoint& d2)
{
    auto half = [](const RatPoint& d) {
        return (d.y > Rat(0) || (d.y == Rat(0) && d.x > Rat(0))) ? 0 : 1;
    };
    int h1 = half(d1), h2 = half(d2);
    if (h1 != h2) return h1 < h2;
    return cross_dir(d1, d2) > Rat(0);
}

RatPoint Arrangement::he_dir(int h) const
{
    const RatPoint& a = verts_[he_tail(h)].p;
    const RatPoint& b = verts_[he_head(h)].p;
    return {b.x - a.x, b.y - a.y};
}

Arrangement::Arrangement(std::vector<ArrSegment> segments) : segs_(std::move(segments))
{
    const size_t n = segs_.size();
    std::vector<std::vector<RatPoint>> pts(n);
    for (size_t i = 0; i < n; ++i) {
        pts[i].push_back(segs_[i].a);
        pts[i].push_back(segs_[i].b);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const ArrSegment &s = segs_[i], &t = segs_[j];
            RatPoint ds{s.b.x - s.a.x, s.b.y - s.a.y};
            RatPoint dt{t.b.x - t.a.x, t.b.y - t.a.y};
            Rat denom = cross_dir(ds, dt);
            if (denom == Rat(0)) {
                if (cross(s.a, s.b, t.a) == Rat(0)) {
                    // collinear: interiors must be disjoint
                    auto strictly_inside = [&](const ArrSegment& seg, const RatPoint& p) {
                        return on_segment(seg, p) && !(p == seg.a) && !(p == seg.b);
                    };
                    if (strictly_inside(s, t.a) || strictly_inside(s, t.b) ||
                        strictly_inside(t, s.a) || strictly_inside(t, s.b) ||
                        (s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a))
                        fail(errc::degenerate_offsets, "collinear overlapping segments");
                }
                continue;
            }
            RatPoint w{t.a.x - s.a.x, t.a.y - s.a.y};
            Rat u = cross_dir(w, dt) / denom;
            Rat v = cross_dir(w, ds) / denom;
            if (u < Rat(0) || u > Rat(1) || v < Rat(0) || v > Rat(1)) continue;
            RatPoint p{s.a.x + u * ds.x, s.a.y + u * ds.y};
            pts[i].push_back(p);
            pts[j].push_back(p);
        }

    std::map<RatPoint, int> vid;
    auto vertex_of = [&](const RatPoint& p) {
        auto it = vid.find(p);
        if (it == vid.end()) {
            it = vid.emplace(p, (int)verts_.size()).first;
            verts_.push_back({p, {}});
        }
        return it->second;
    };

    for (size_t i = 0; i < n; ++i) {
        auto& v = pts[i];
        RatPoint d{segs_[i].b.x - segs_[i].a.x, segs_[i].b.y - segs_[i].a.y};
        std::sort(v.begin(), v.end(), [&](const RatPoint& p, const RatPoint& q) {
            return dot_dir({p.x - segs_[i].a.x, p.y - segs_[i].a.y}, d) <
                   dot_dir({q.x - segs_[i].a.x, q.y - segs_[i].a.y}, d);
        });
        v.erase(std::unique(v.begin(), v.end()), v.end());
        for (size_t k = 0; k + 1 < v.size(); ++k) {
            int a = vertex_of(v[k]), b = vertex_of(v[k + 1]);
            int e = (int)edges_.size();
            edges_.push_back({{a, b}, (int)i, {-1, -1}});
            verts_[a].out.push_back(2 * e);
            verts_[b].out.push_back(2 * e + 1);
        }
    }

    for (auto& v : verts_)
        std::sort(v.out.begin(), v.out.end(),
                  [&](int h1, int h2) { return dir_less(he_dir(h1), he_dir(h2)); });

    // next(h): at the head of h, rotate one step clockwise from the twin
    next_.assign(2 * edges_.size(), -1);
    for (int h = 0; h < (int)next_.size(); ++h) {
        int tw = h ^ 1;
        int v = he_tail(tw);
        const auto& out = verts_[v].out;
        auto it = std::find(out.begin(), out.end(), tw);
        size_t idx = it - out.begin();
        next_[h] = out[(idx + out.size() - 1) % out.size()];
    }

    std::vector<int> face_of(2 * edges_.size(), -1);
    for (int h = 0; h < (int)next_.size(); ++h) {
        if (face_of[h] != -1) continue;
        int f = nfaces_++;
        orbits_.push_back({});
        Rat area(0);
        int cur = h;
        do {
            face_of[cur] = f;
            orbits_.back().push_back(cur);
            const RatPoint& p = verts_[he_tail(cur)].p;
            const RatPoint& q = verts_[he_head(cur)].p;
            area += p.x * q.y - q.x * p.y;
            cur = next_[cur];
        } while (cur != h);
        if (area < Rat(0)) {
            if (outer_ != -1) fail(errc::degenerate_offsets, "multiple unbounded faces");
            outer_ = f;
        }
    }
    for (int e = 0; e < (int)edges_.size(); ++e) {
        edges_[e].face[0] = face_of[2 * e];
        edges_[e].face[1] = face_of[2 * e + 1];
    }
}

} // namespace bf
