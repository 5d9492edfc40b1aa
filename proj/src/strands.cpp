#include "borfloer/strands.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "borfloer/errors.hpp"

namespace bf {

namespace {

// A literal diagram: monotone strands (s,t) with s<t plus constant strands
// (u,u), pairwise distinct starts and pairwise distinct ends.
struct Literal {
    std::vector<std::pair<int, int>> strands; // sorted
    friend auto operator<=>(const Literal&, const Literal&) = default;
    friend bool operator==(const Literal&, const Literal&) = default;
};

int crossings(const Literal& d)
{
    int c = 0;
    for (size_t i = 0; i < d.strands.size(); ++i)
        for (size_t j = i + 1; j < d.strands.size(); ++j) {
            auto [s1, t1] = d.strands[i];
            auto [s2, t2] = d.strands[j];
            if ((s1 - s2) * (long long)(t1 - t2) < 0) ++c;
        }
    return c;
}

// Expand smeared horizontals into 2^{|H|} literal diagrams.
void expand(const PointedMatchedCircle& z, const StrandTerm& t, std::set<Literal>& out)
{
    Literal base;
    for (auto& c : t.chords) base.strands.push_back({c.start, c.end});
    size_t h = t.horizontals.size();
    for (size_t mask = 0; mask < (size_t(1) << h); ++mask) {
        Literal d = base;
        bool ok = true;
        for (size_t i = 0; i < h; ++i) {
            auto [p, q] = z.pair_points(t.horizontals[i]);
            int pt = (mask >> i) & 1 ? q : p;
            d.strands.push_back({pt, pt});
        }
        // distinct literal start/end points are automatic for valid terms
        (void)ok;
        std::sort(d.strands.begin(), d.strands.end());
        auto it = out.find(d);
        if (it == out.end())
            out.insert(std::move(d));
        else
            out.erase(it); // char 2
    }
}

// Regroup a set of literal diagrams into smeared terms.  Every constant strand
// must recombine with its partner position; throws if the set is not exactly a
// union of smeared expansions.
std::set<StrandTerm> regroup(const PointedMatchedCircle& z, std::set<Literal> lits)
{
    std::set<StrandTerm> out;
    while (!lits.empty()) {
        const Literal d = *lits.begin();
        StrandTerm t;
        for (auto& [s, e] : d.strands) {
            if (s == e)
                t.horizontals.push_back(z.pair_of(s));
            else
                t.chords.push_back({s, e});
        }
        std::sort(t.chords.begin(), t.chords.end());
        std::sort(t.horizontals.begin(), t.horizontals.end());
        std::set<Literal> expansion;
        expand(z, t, expansion);
        for (auto& e : expansion) {
            auto it = lits.find(e);
            if (it == lits.end())
                fail(errc::bad_input, "smeared regrouping failed: literal output is not a "
                                      "union of horizontal expansions");
            lits.erase(it);
        }
        out.insert(std::move(t));
    }
    return out;
}

Literal compose_literal(const Literal& a, const Literal& b, bool& ok)
{
    ok = false;
    // end set of a must equal start set of b
    std::vector<int> ends, starts;
    for (auto& [s, e] : a.strands) ends.push_back(e);
    for (auto& [s, e] : b.strands) starts.push_back(s);
    std::sort(ends.begin(), ends.end());
    std::sort(starts.begin(), starts.end());
    if (ends != starts) return {};
    Literal r;
    for (auto& [s, e] : a.strands) {
        int t2 = -1;
        for (auto& [s2, e2] : b.strands)
            if (s2 == e) t2 = e2;
        r.strands.push_back({s, t2});
    }
    // double-crossing rule: a pair of glued paths crossing in both stages dies
    for (size_t i = 0; i < a.strands.size(); ++i)
        for (size_t j = i + 1; j < a.strands.size(); ++j) {
            auto [s1, m1] = a.strands[i];
            auto [s2, m2] = a.strands[j];
            long long e1 = 0, e2 = 0;
            for (auto& [sb, eb] : b.strands) {
                if (sb == m1) e1 = eb;
                if (sb == m2) e2 = eb;
            }
            bool cross1 = (s1 - s2) * (long long)(m1 - m2) < 0;
            bool cross2 = (m1 - m2) * (e1 - e2) < 0;
            if (cross1 && cross2) return {};
        }
    std::sort(r.strands.begin(), r.strands.end());
    ok = true;
    return r;
}

} // namespace

bool term_valid(const PointedMatchedCircle& z, const StrandTerm& t)
{
    std::set<int> left, right;
    auto add = [](std::set<int>& s, int v) {
        return s.insert(v).second;
    };
    for (auto& c : t.chords) {
        if (!(1 <= c.start && c.start < c.end && c.end <= z.points())) return false;
        if (!add(left, z.pair_of(c.start))) return false;
        if (!add(right, z.pair_of(c.end))) return false;
    }
    for (int h : t.horizontals) {
        if (h < 1 || h > z.num_pairs()) return false;
        if (!add(left, h)) return false;
        if (!add(right, h)) return false;
    }
    // sortedness is part of the canonical form
    if (!std::is_sorted(t.chords.begin(), t.chords.end())) return false;
    if (!std::is_sorted(t.horizontals.begin(), t.horizontals.end())) return false;
    return true;
}

Idempotent left_idem(const PointedMatchedCircle& z, const StrandTerm& t)
{
    Idempotent i;
    for (auto& c : t.chords) i.pairs.insert(z.pair_of(c.start));
    for (int h : t.horizontals) i.pairs.insert(h);
    return i;
}

Idempotent right_idem(const PointedMatchedCircle& z, const StrandTerm& t)
{
    Idempotent i;
    for (auto& c : t.chords) i.pairs.insert(z.pair_of(c.end));
    for (int h : t.horizontals) i.pairs.insert(h);
    return i;
}

AlgebraElement element(const PointedMatchedCircle& z, std::vector<StrandTerm> terms)
{
    AlgebraElement e;
    e.circle = &z;
    for (auto& t : terms) {
        if (!term_valid(z, t)) fail(errc::bad_input, "invalid strand term");
        e.toggle(t);
    }
    return e;
}

AlgebraElement element_of(const PointedMatchedCircle& z, const StrandTerm& t)
{
    return element(z, {t});
}

AlgebraElement zero_element(const PointedMatchedCircle& z)
{
    AlgebraElement e;
    e.circle = &z;
    return e;
}

AlgebraElement multiply_strands(const AlgebraElement& a, const AlgebraElement& b)
{
    if (!a.circle || !b.circle || !(*a.circle == *b.circle))
        fail(errc::circle_mismatch, "product of elements over different circles");
    const auto& z = *a.circle;
    std::set<Literal> acc;
    for (auto& ta : a.terms)
        for (auto& tb : b.terms) {
            std::set<Literal> ea, eb;
            expand(z, ta, ea);
            expand(z, tb, eb);
            for (auto& da : ea)
                for (auto& db : eb) {
                    bool ok;
                    Literal r = compose_literal(da, db, ok);
                    if (!ok) continue;
                    auto it = acc.find(r);
                    if (it == acc.end())
                        acc.insert(std::move(r));
                    else
                        acc.erase(it);
                }
        }
    AlgebraElement out = zero_element(z);
    for (auto& t : regroup(z, std::move(acc))) out.toggle(t);
    return out;
}

AlgebraElement differential_strands(const AlgebraElement& a)
{
    if (!a.circle) fail(errc::circle_mismatch, "differential of unattached element");
    const auto& z = *a.circle;
    std::set<Literal> acc;
    for (auto& t : a.terms) {
        std::set<Literal> ex;
        expand(z, t, ex);
        for (auto& d : ex) {
            int c0 = crossings(d);
            for (size_t i = 0; i < d.strands.size(); ++i)
                for (size_t j = i + 1; j < d.strands.size(); ++j) {
                    auto [s1, t1] = d.strands[i];
                    auto [s2, t2] = d.strands[j];
                    if ((s1 - s2) * (long long)(t1 - t2) >= 0) continue;
                    Literal r = d;
                    r.strands[i] = {std::min(s1, s2), std::min(t1, t2)};
                    r.strands[j] = {std::max(s1, s2), std::max(t1, t2)};
                    // resolving must kill exactly this one crossing
                    std::sort(r.strands.begin(), r.strands.end());
                    if (crossings(r) != c0 - 1) continue;
                    auto it = acc.find(r);
                    if (it == acc.end())
                        acc.insert(std::move(r));
                    else
                        acc.erase(it);
                }
        }
    }
    AlgebraElement out = zero_element(z);
    for (auto& t : regroup(z, std::move(acc))) out.toggle(t);
    return out;
}

StrandTerm idempotent_term(const Idempotent& i)
{
    StrandTerm t;
    for (int p : i.pairs) t.horizontals.push_back(p);
    return t;
}

AlgebraElement idempotent_element(const PointedMatchedCircle& z, const Idempotent& i)
{
    return element_of(z, idempotent_term(i));
}

AlgebraElement unit(const PointedMatchedCircle& z)
{
    AlgebraElement e = zero_element(z);
    int np = z.num_pairs();
    for (size_t mask = 0; mask < (size_t(1) << np); ++mask) {
        StrandTerm t;
        for (int p = 1; p <= np; ++p)
            if ((mask >> (p - 1)) & 1) t.horizontals.push_back(p);
        e.toggle(t);
    }
    return e;
}

StrandBasis::StrandBasis(const PointedMatchedCircle& z) : z_(&z)
{
    // enumerate chord sets with distinct start pairs / end pairs, then pad
    // with horizontals on pairs untouched on both sides
    std::vector<ReebChord> chords = z.reeb_chords();
    std::vector<StrandTerm> found;
    std::vector<ReebChord> cur;
    std::function<void(size_t, unsigned, unsigned)> rec = [&](size_t from, unsigned lmask,
                                                              unsigned rmask) {
        {
            unsigned used = lmask | rmask;
            std::vector<int> avail;
            for (int p = 1; p <= z.num_pairs(); ++p)
                if (!((used >> (p - 1)) & 1)) avail.push_back(p);
            // every subset of available pairs as horizontals
            for (size_t hmask = 0; hmask < (size_t(1) << avail.size()); ++hmask) {
                StrandTerm t;
                t.chords = cur;
                for (size_t i = 0; i < avail.size(); ++i)
                    if ((hmask >> i) & 1) t.horizontals.push_back(avail[i]);
                found.push_back(std::move(t));
            }
        }
        for (size_t i = from; i < chords.size(); ++i) {
            int lp = z.pair_of(chords[i].start), rp = z.pair_of(chords[i].end);
            if ((lmask >> (lp - 1)) & 1) continue;
            if ((rmask >> (rp - 1)) & 1) continue;
            cur.push_back(chords[i]);
            rec(i + 1, lmask | (1u << (lp - 1)), rmask | (1u << (rp - 1)));
            cur.pop_back();
        }
    };
    rec(0, 0, 0);
    std::sort(found.begin(), found.end(), [](const StrandTerm& a, const StrandTerm& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        if (a.chords != b.chords) return a.chords < b.chords;
        return a.horizontals < b.horizontals;
    });
    basis_ = std::move(found);
    for (int i = 0; i < (int)basis_.size(); ++i) index_[basis_[i]] = i;
}

std::vector<StrandTerm> StrandBasis::weight_group(int w) const
{
    std::vector<StrandTerm> out;
    for (auto& t : basis_)
        if (t.weight() == w) out.push_back(t);
    return out;
}

int StrandBasis::index_of(const StrandTerm& t) const
{
    auto it = index_.find(t);
    return it == index_.end() ? -1 : it->second;
}

} // namespace bf
