#include "borfloer/pmc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "borfloer/errors.hpp"
#include "borfloer/rational.hpp"

namespace bf {

Rat parse_rat(const std::string& s)
{
    auto slash = s.find('/');
    auto to_i = [](const std::string& t) -> long long {
        size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("trailing characters in rational: " + t);
        return v;
    };
    if (slash == std::string::npos) return Rat(to_i(s));
    long long d = to_i(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(to_i(s.substr(0, slash)), d);
}

int surgery_circle_count(int points, const std::vector<int>& matching)
{
    const int n = points;
    if (n == 0) return 1;
    // partner of each point under the matching
    std::vector<int> partner(n + 1, 0);
    {
        std::map<int, std::vector<int>> by_pair;
        for (int p = 1; p <= n; ++p) by_pair[matching[p - 1]].push_back(p);
        for (auto& [id, pts] : by_pair) {
            partner[pts[0]] = pts[1];
            partner[pts[1]] = pts[0];
        }
    }
    // Arc a_i runs from point i to point i+1 (a_n wraps through the basepoint
    // to point 1).  Surgery reroutes: after arriving at point i+1, continue on
    // the arc leaving its partner.
    auto succ = [&](int arc) {
        int arrive = (arc % n) + 1;
        return partner[arrive];
    };
    std::vector<char> seen(n + 1, 0);
    int circles = 0;
    for (int a = 1; a <= n; ++a) {
        if (seen[a]) continue;
        ++circles;
        int cur = a;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = succ(cur);
        }
    }
    return circles;
}

int surgery_circle_count_bruteforce(int points, const std::vector<int>& matching)
{
    const int n = points;
    if (n == 0) return 1;
    // Each point p splits into an in-side (2p-2) and out-side (2p-1), indices
    // 0..2n-1.  Circle arcs join out(p) -- in(p+1); the band at {p,q} joins
    // in(p) -- out(q) and in(q) -- out(p).
    std::vector<int> uf(2 * n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    auto in_side = [&](int p) { return 2 * (p - 1); };
    auto out_side = [&](int p) { return 2 * (p - 1) + 1; };
    for (int p = 1; p <= n; ++p) unite(out_side(p), in_side(p % n + 1));
    std::map<int, std::vector<int>> by_pair;
    for (int p = 1; p <= n; ++p) by_pair[matching[p - 1]].push_back(p);
    for (auto& [id, pts] : by_pair) {
        unite(in_side(pts[0]), out_side(pts[1]));
        unite(in_side(pts[1]), out_side(pts[0]));
    }
    int comps = 0;
    for (int x = 0; x < 2 * n; ++x)
        if (find(x) == x) ++comps;
    return comps;
}

PointedMatchedCircle PointedMatchedCircle::validate(int points, std::vector<int> matching,
                                                    std::string name)
{
    if (points < 0 || points % 4 != 0)
        fail(errc::not_multiple_of_four, "point count " + std::to_string(points));
    if ((int)matching.size() != points)
        fail(errc::pair_count_wrong, "matching length " + std::to_string(matching.size()) +
                                         " for " + std::to_string(points) + " points");
    std::map<int, int> occurrences;
    for (int id : matching) ++occurrences[id];
    for (auto& [id, cnt] : occurrences)
        if (cnt != 2)
            fail(errc::pair_count_wrong,
                 "pair id " + std::to_string(id) + " occurs " + std::to_string(cnt) + " times");
    int circles = surgery_circle_count(points, matching);
    if (circles != 1)
        fail(errc::surgery_disconnected,
             "surgery yields " + std::to_string(circles) + " circles");

    PointedMatchedCircle z;
    z.n_ = points;
    z.name_ = std::move(name);
    // canonical pair ids by first occurrence
    std::map<int, int> renum;
    z.matching_.reserve(points);
    for (int id : matching) {
        auto it = renum.find(id);
        if (it == renum.end()) it = renum.emplace(id, (int)renum.size() + 1).first;
        z.matching_.push_back(it->second);
    }
    z.partner_.assign(points, 0);
    z.pair_points_.assign(points / 2, {0, 0});
    for (int pid = 1; pid <= points / 2; ++pid) {
        std::vector<int> pts;
        for (int p = 1; p <= points; ++p)
            if (z.matching_[p - 1] == pid) pts.push_back(p);
        z.pair_points_[pid - 1] = {pts[0], pts[1]};
        z.partner_[pts[0] - 1] = pts[1];
        z.partner_[pts[1] - 1] = pts[0];
    }
    return z;
}

std::vector<ReebChord> PointedMatchedCircle::reeb_chords() const
{
    std::vector<ReebChord> out;
    for (int s = 1; s <= n_; ++s)
        for (int t = s + 1; t <= n_; ++t) out.push_back({s, t});
    return out;
}

PointedMatchedCircle PointedMatchedCircle::reverse_orientation() const
{
    std::vector<int> m(n_);
    for (int p = 1; p <= n_; ++p) m[p - 1] = matching_[n_ - p];
    return validate(n_, std::move(m), name_.empty() ? "" : name_ + "_rev");
}

PointedMatchedCircle torus_circle()
{
    return PointedMatchedCircle::validate(4, {1, 2, 1, 2}, "torus");
}

PointedMatchedCircle genus2_antipodal()
{
    return PointedMatchedCircle::validate(8, {1, 2, 3, 4, 1, 2, 3, 4}, "genus2_antipodal");
}

PointedMatchedCircle genus2_blockwise()
{
    return PointedMatchedCircle::validate(8, {1, 2, 1, 2, 3, 4, 3, 4}, "genus2_blockwise");
}

PointedMatchedCircle genus0_circle()
{
    return PointedMatchedCircle::validate(0, {}, "genus0");
}

} // namespace bf
