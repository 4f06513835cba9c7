#include "curvematch/cpsm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <tuple>

#include "matching_detail.hpp"

namespace curvematch {

namespace detail {

ChordTable ChordTable::build(const Curve& p, const PointSet& s, double eps) {
    ChordTable table;
    table.n = p.segment_count();
    table.k = s.size();
    table.chords.resize(static_cast<size_t>(table.n) * table.k);
    for (int si = 0; si < table.k; ++si) {
        for (int i = 0; i < table.n; ++i) {
            auto chord = ball_segment_intersection(p.segment(i), s[si], eps);
            if (chord) chord->segment_index = i;
            table.chords[static_cast<size_t>(si) * table.n + i] = chord;
        }
    }
    return table;
}

namespace {

struct Interval {
    double lo = 1.0;
    double hi = 0.0;
    bool empty() const { return lo > hi; }
};

Interval to_interval(const std::optional<ParamInterval>& p) {
    if (!p) return {};
    return {p->lo, p->hi};
}

}  // namespace

void row_walk(const Curve& p, Point qa, Point qb, const ChordTable& chords, int qa_idx,
              int qb_idx, double eps, CurvePos seed, int cap, std::vector<TopReach>& out) {
    const Segment q_edge{qa, qb};

    Interval bottom;
    {
        Interval b = to_interval(chords.chord(qa_idx, seed.seg));
        if (b.empty()) return;
        double lo = std::max(seed.t, b.lo);
        if (lo > b.hi + kParamTol) return;
        bottom = {lo, std::max(b.hi, lo)};
    }
    Interval left;  // reachable part of the boundary entering the current cell

    for (int j = seed.seg; j <= cap; ++j) {
        if (j > seed.seg) {
            Interval b = to_interval(chords.chord(qa_idx, j));
            Interval next_bottom{};
            if (!bottom.empty() && bottom.hi >= 1.0 && !b.empty() && b.lo <= 0.0)
                next_bottom = {0.0, b.hi};
            bottom = next_bottom;
        }
        if (bottom.empty() && left.empty()) return;

        Interval top = to_interval(chords.chord(qb_idx, j));
        if (!top.empty()) {
            if (!left.empty()) {
                out.push_back({j, top.lo});
            } else if (!bottom.empty()) {
                double lo = std::max(top.lo, bottom.lo);
                if (lo <= top.hi + kParamTol) out.push_back({j, std::min(lo, top.hi)});
            }
        }

        if (j == cap) return;
        Interval vert = to_interval(ball_segment_intersection(q_edge, p.vertex(j + 1), eps));
        Interval next_left{};
        if (!vert.empty()) {
            if (!bottom.empty()) {
                next_left = vert;
            } else if (!left.empty()) {
                next_left = {std::max(vert.lo, left.lo), vert.hi};
                if (next_left.lo > next_left.hi) next_left = {};
            }
        }
        left = next_left;
    }
}

double suffix_cover_start(const Curve& p, const ChordTable& chords, int point, Point center,
                          double eps) {
    const double inf = std::numeric_limits<double>::infinity();
    const int n = p.segment_count();
    if (n == 0) {
        return dist_sq(p.start(), center) <= eps * eps + kSquaredTol ? 0.0 : inf;
    }
    if (dist_sq(p.end(), center) > eps * eps + kSquaredTol) return inf;
    double start = n;  // global position of the curve end
    for (int j = n - 1; j >= 0; --j) {
        Interval c = to_interval(chords.chord(point, j));
        if (c.empty() || c.hi < 1.0) return start;
        start = j + c.lo;
        if (c.lo > 0.0) return start;
    }
    return 0.0;
}

}  // namespace detail

using detail::ChordTable;
using detail::TopReach;

namespace {

bool point_in_ball(Point p, Point center, double eps) {
    return dist_sq(p, center) <= eps * eps + kSquaredTol;
}

}  // namespace

DecideResult discrete_subset_decide(const Curve& p, const PointSet& s, double eps) {
    DecideResult result;
    MatchWitness witness;
    for (int v = 0; v < p.vertex_count(); ++v) {
        int chosen = -1;
        for (int i = 0; i < s.size(); ++i) {
            if (point_in_ball(s[i], p.vertex(v), eps)) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0) return result;
        witness.q_vertices.push_back(chosen);
        int seg = std::min(v, std::max(0, p.segment_count() - 1));
        witness.visits.push_back({chosen, seg, v == p.vertex_count() - 1 ? 1.0 : 0.0});
    }
    result.feasible = true;
    result.witness = std::move(witness);
    return result;
}

DecideResult discrete_allpoints_decide(const Curve& p, const PointSet& s, double eps) {
    DecideResult result;
    const int k = s.size();
    const int nv = p.vertex_count();

    // Nearest vertex per point, ties to the lower index.
    std::vector<int> assigned(static_cast<size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
        double best = std::numeric_limits<double>::infinity();
        int arg = -1;
        for (int v = 0; v < nv; ++v) {
            double d = dist_sq(s[i], p.vertex(v));
            if (d < best - kSquaredTol) {
                best = d;
                arg = v;
            }
        }
        if (arg < 0 || best > eps * eps + kSquaredTol) return result;  // point in no vertex ball
        assigned[static_cast<size_t>(i)] = arg;
    }

    // Every vertex ball must contain some point (fillers repeat points).
    std::vector<int> filler(static_cast<size_t>(nv), -1);
    for (int v = 0; v < nv; ++v) {
        for (int i = 0; i < k; ++i) {
            if (point_in_ball(s[i], p.vertex(v), eps)) {
                filler[static_cast<size_t>(v)] = i;
                break;
            }
        }
        if (filler[static_cast<size_t>(v)] < 0) return result;
    }

    MatchWitness witness;
    for (int v = 0; v < nv; ++v) {
        bool any = false;
        for (int i = 0; i < k; ++i) {
            if (assigned[static_cast<size_t>(i)] == v) {
                witness.q_vertices.push_back(i);
                int seg = std::min(v, std::max(0, p.segment_count() - 1));
                witness.visits.push_back({i, seg, v == nv - 1 ? 1.0 : 0.0});
                any = true;
            }
        }
        if (!any) {
            int i = filler[static_cast<size_t>(v)];
            witness.q_vertices.push_back(i);
            int seg = std::min(v, std::max(0, p.segment_count() - 1));
            witness.visits.push_back({i, seg, v == nv - 1 ? 1.0 : 0.0});
        }
    }
    result.feasible = true;
    result.witness = std::move(witness);
    return result;
}

ReachTable reachability_table(const Curve& p, const PointSet& s, double eps) {
    const int n = p.segment_count();
    const int k = s.size();
    ReachTable table(n, k);
    ChordTable chords = ChordTable::build(p, s, eps);
    std::vector<TopReach> tops;
    for (int i = 0; i < n; ++i) {
        for (int si = 0; si < k; ++si) {
            const auto& chord = chords.chord(si, i);
            if (!chord) continue;  // s not visitable at segment i
            CurvePos seed{i, chord->lo};
            for (int t = 0; t < k; ++t) {
                tops.clear();
                detail::row_walk(p, s[si], s[t], chords, si, t, eps, seed, n - 1, tops);
                if (!tops.empty()) table.set(i, si, t, tops.back().seg);
            }
        }
    }
    return table;
}

namespace {

struct DijkstraEntry {
    double global;
    int point;
    int seg;
    bool operator>(const DijkstraEntry& other) const {
        return std::tie(global, point, seg) > std::tie(other.global, other.point, other.seg);
    }
};

struct SubsetSearch {
    const Curve& p;
    const PointSet& s;
    double eps;
    ChordTable chords;
    int n;
    int k;
    std::vector<double> best;      // [point * n + seg] leftmost feasible position (local t)
    std::vector<int> parent;       // encoded parent state, -1 root, -2 unset
    std::vector<double> suffix;    // suffix_cover_start per point

    SubsetSearch(const Curve& p_, const PointSet& s_, double eps_)
        : p(p_), s(s_), eps(eps_), chords(ChordTable::build(p_, s_, eps_)),
          n(p_.segment_count()), k(s_.size()) {
        best.assign(static_cast<size_t>(k) * std::max(n, 1),
                    std::numeric_limits<double>::infinity());
        parent.assign(best.size(), -2);
        suffix.resize(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            suffix[static_cast<size_t>(i)] = detail::suffix_cover_start(p, chords, i, s[i], eps);
    }

    size_t idx(int point, int seg) const { return static_cast<size_t>(point) * n + seg; }

    MatchWitness reconstruct(int point, int seg) const {
        std::vector<VisitStep> rev;
        int cur = static_cast<int>(idx(point, seg));
        while (cur >= 0) {
            int pt = cur / n;
            int sg = cur % n;
            rev.push_back({pt, sg, best[static_cast<size_t>(cur)]});
            cur = parent[static_cast<size_t>(cur)];
        }
        MatchWitness w;
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
            w.q_vertices.push_back(it->point);
            w.visits.push_back(*it);
        }
        return w;
    }

    DecideResult run() {
        DecideResult result;
        std::priority_queue<DijkstraEntry, std::vector<DijkstraEntry>, std::greater<>> queue;
        for (int i = 0; i < k; ++i) {
            if (!point_in_ball(s[i], p.start(), eps)) continue;
            if (0.0 < best[idx(i, 0)]) {
                best[idx(i, 0)] = 0.0;
                parent[idx(i, 0)] = -1;
                queue.push({0.0, i, 0});
            }
        }
        std::vector<TopReach> tops;
        while (!queue.empty()) {
            auto [global, point, seg] = queue.top();
            queue.pop();
            double t = best[idx(point, seg)];
            if (global > seg + t + detail::kParamTol) continue;  // stale

            if (seg + t >= suffix[static_cast<size_t>(point)] - detail::kParamTol) {
                result.feasible = true;
                result.witness = reconstruct(point, seg);
                return result;
            }

            CurvePos pos{seg, t};
            for (int target = 0; target < k; ++target) {
                tops.clear();
                detail::row_walk(p, s[point], s[target], chords, point, target, eps, pos, n - 1,
                                 tops);
                for (const TopReach& top : tops) {
                    if (top.seg == seg && target == point) continue;
                    size_t id = idx(target, top.seg);
                    if (top.lo < best[id] - detail::kParamTol) {
                        best[id] = top.lo;
                        parent[id] = static_cast<int>(idx(point, seg));
                        queue.push({top.seg + top.lo, target, top.seg});
                    }
                }
            }
        }
        return result;
    }
};

}  // namespace

DecideResult continuous_subset_decide(const Curve& p, const PointSet& s, double eps) {
    DecideResult result;
    if (s.size() == 0 || eps < 0) return result;
    if (p.segment_count() == 0) {
        for (int i = 0; i < s.size(); ++i) {
            if (point_in_ball(s[i], p.start(), eps)) {
                MatchWitness w;
                w.q_vertices.push_back(i);
                w.visits.push_back({i, 0, 0.0});
                result.feasible = true;
                result.witness = std::move(w);
                return result;
            }
        }
        return result;
    }
    SubsetSearch search(p, s, eps);
    return search.run();
}

std::vector<double> critical_eps_candidates(const Curve& p, const PointSet& s) {
    std::vector<double> values;
    const int n = p.segment_count();
    const int k = s.size();

    for (int i = 0; i < k; ++i)
        for (int v = 0; v < p.vertex_count(); ++v) values.push_back(dist(s[i], p.vertex(v)));

    for (int i = 0; i < k; ++i)
        for (int m = 0; m < n; ++m) values.push_back(point_segment_distance(s[i], p.segment(m)));

    for (int v = 0; v < p.vertex_count(); ++v)
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (a == b) continue;
                values.push_back(point_segment_distance(p.vertex(v), Segment{s[a], s[b]}));
            }

    // Chord alignment events: smallest eps where right(P_m[a]) >= left(P_m[b]).
    for (int m = 0; m < n; ++m) {
        Segment seg = p.segment(m);
        Point d = seg.b - seg.a;
        double len = norm(d);
        if (len == 0.0) continue;
        Point u{d.x / len, d.y / len};
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (a == b) continue;
                double pa = dot(s[a] - seg.a, u);
                double pb = dot(s[b] - seg.a, u);
                double delta = std::abs(pb - pa);
                if (delta <= 1e-15) continue;
                double da_sq = dist_sq(s[a], Point{seg.a.x + pa * u.x, seg.a.y + pa * u.y});
                double db_sq = dist_sq(s[b], Point{seg.a.x + pb * u.x, seg.a.y + pb * u.y});
                double mid = (delta * delta + da_sq - db_sq) / (2.0 * delta);
                double e_sq = db_sq + mid * mid;
                if (e_sq < da_sq - 1e-12) continue;
                double e = std::sqrt(e_sq);
                double lhs = std::sqrt(std::max(0.0, e_sq - da_sq)) +
                             std::sqrt(std::max(0.0, e_sq - db_sq));
                if (std::abs(lhs - delta) <= 1e-6 * std::max(1.0, delta)) values.push_back(e);
            }
    }

    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end(),
                             [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
                 values.end());
    return values;
}

namespace {

template <class Decide>
OptimizeResult optimize_by_candidates(const Curve& p, const PointSet& s, double tol,
                                      Decide&& decide) {
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    if (s.size() == 0) throw std::invalid_argument("point set must be nonempty");

    double bracket = 0.0;
    for (int i = 0; i < s.size(); ++i)
        for (const Point& v : p.vertices()) bracket = std::max(bracket, dist(s[i], v));

    DecideResult top = decide(bracket);
    if (!top.feasible)
        throw std::runtime_error("infeasible even at the bracket maximum");

    DecideResult at_zero = decide(0.0);
    if (at_zero.feasible) return {0.0, *at_zero.witness};

    std::vector<double> candidates = critical_eps_candidates(p, s);
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                    [&](double c) { return c <= 0.0 || c > bracket; }),
                     candidates.end());

    double lo = 0.0;
    double hi = bracket;
    std::optional<MatchWitness> hi_witness = top.witness;
    size_t a = 0, b = candidates.size();
    while (a < b) {
        size_t mid = (a + b) / 2;
        DecideResult r = decide(candidates[mid]);
        if (r.feasible) {
            b = mid;
            hi = candidates[mid];
            hi_witness = r.witness;
        } else {
            a = mid + 1;
        }
    }
    if (a > 0) lo = candidates[a - 1];

    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        DecideResult r = decide(mid);
        if (r.feasible) {
            hi = mid;
            hi_witness = r.witness;
        } else {
            lo = mid;
        }
    }
    return {hi, hi_witness ? *hi_witness : MatchWitness{}};
}

}  // namespace

OptimizeResult continuous_subset_optimize(const Curve& p, const PointSet& s, double tol) {
    return optimize_by_candidates(p, s, tol,
                                  [&](double e) { return continuous_subset_decide(p, s, e); });
}

// ---------------------------------------------------------------------------
// Brute force: backtracking over vertex sequences with an explicit frontier of
// feasible end positions on P.

namespace {

struct FrontierInterval {
    int seg;
    double lo;
    double hi;
};

using Frontier = std::vector<FrontierInterval>;

struct BruteSearch {
    const Curve& p;
    const PointSet& s;
    double eps;
    BruteForceOptions opt;
    ChordTable chords;
    int n;
    int k;
    std::vector<double> suffix;
    std::vector<char> in_any_cylinder;
    std::vector<int> closest_segment;
    int max_len;

    struct MemoEntry {
        Frontier frontier;
        uint32_t used;
        uint32_t visited;
        uint32_t discharged;
        int depth;
    };
    std::vector<std::vector<MemoEntry>> memo;  // per last point

    BruteSearch(const Curve& p_, const PointSet& s_, double eps_, const BruteForceOptions& o)
        : p(p_), s(s_), eps(eps_), opt(o), chords(ChordTable::build(p_, s_, eps_)),
          n(p_.segment_count()), k(s_.size()) {
        suffix.resize(static_cast<size_t>(k));
        in_any_cylinder.resize(static_cast<size_t>(k));
        closest_segment.assign(static_cast<size_t>(k), -1);
        for (int i = 0; i < k; ++i) {
            suffix[static_cast<size_t>(i)] = detail::suffix_cover_start(p, chords, i, s[i], eps);
            bool any = false;
            double best = std::numeric_limits<double>::infinity();
            for (int m = 0; m < n; ++m) {
                double d = point_segment_distance_sq(s[i], p.segment(m));
                if (d < best - kSquaredTol) {
                    best = d;
                    closest_segment[static_cast<size_t>(i)] = m;
                }
                if (chords.chord(i, m)) any = true;
            }
            in_any_cylinder[static_cast<size_t>(i)] = any ? 1 : 0;
        }
        max_len = opt.unique ? k : (n + 1) * k;
        memo.resize(static_cast<size_t>(k));
    }

    Frontier start_frontier(int q0) const {
        Frontier f;
        if (!point_in_ball(s[q0], p.start(), eps)) return f;
        for (int m = 0; m < n; ++m) {
            const auto& c = chords.chord(q0, m);
            if (!c || c->lo > 0.0) break;
            f.push_back({m, 0.0, c->hi});
            if (c->hi < 1.0) break;
        }
        if (f.empty() && n == 0) f.push_back({0, 0.0, 0.0});
        return f;
    }

    Frontier step(const Frontier& from, int qa, int qb) const {
        Frontier out;
        const Segment q_edge{s[qa], s[qb]};
        size_t fi = 0;
        bool carry = false;
        struct Iv {
            double lo = 1.0, hi = 0.0;
            bool empty() const { return lo > hi; }
        };
        Iv left{};
        bool left_valid = false;
        for (int j = 0; j < n; ++j) {
            const auto& bc = chords.chord(qa, j);
            Iv bottom{};
            bool bottom_valid = false;
            if (bc) {
                double lo = std::numeric_limits<double>::infinity();
                if (carry && bc->lo <= 0.0) lo = 0.0;
                while (fi < from.size() && from[fi].seg < j) ++fi;
                if (fi < from.size() && from[fi].seg == j) lo = std::min(lo, from[fi].lo);
                if (lo <= bc->hi + detail::kParamTol) {
                    bottom = {std::max(0.0, std::min(lo, bc->hi)), bc->hi};
                    bottom_valid = true;
                }
                carry = bottom_valid && bc->hi >= 1.0;
            } else {
                carry = false;
            }

            const auto& tc = chords.chord(qb, j);
            if (tc) {
                if (left_valid) {
                    out.push_back({j, tc->lo, tc->hi});
                } else if (bottom_valid) {
                    double lo = std::max(tc->lo, bottom.lo);
                    if (lo <= tc->hi + detail::kParamTol)
                        out.push_back({j, std::min(lo, tc->hi), tc->hi});
                }
            }

            if (j + 1 < n) {
                auto vert = ball_segment_intersection(q_edge, p.vertex(j + 1), eps);
                Iv next_left{};
                bool next_valid = false;
                if (vert) {
                    if (bottom_valid) {
                        next_left = {vert->lo, vert->hi};
                        next_valid = true;
                    } else if (left_valid) {
                        next_left = {std::max(vert->lo, left.lo), vert->hi};
                        next_valid = next_left.lo <= next_left.hi;
                    }
                }
                left = next_left;
                left_valid = next_valid;
            }
        }
        return out;
    }

    bool closable(const Frontier& f, int q) const {
        if (f.empty()) return false;
        double su = suffix[static_cast<size_t>(q)];
        for (auto it = f.rbegin(); it != f.rend(); ++it) {
            if (it->seg + it->hi >= su - detail::kParamTol) return true;
        }
        return false;
    }

    bool touches_segment(const Frontier& f, int seg) const {
        for (const auto& iv : f)
            if (iv.seg == seg) return true;
        return false;
    }

    static bool frontier_contains(const Frontier& big, const Frontier& small) {
        size_t bi = 0;
        for (const auto& iv : small) {
            while (bi < big.size() &&
                   (big[bi].seg < iv.seg ||
                    (big[bi].seg == iv.seg && big[bi].hi < iv.hi - detail::kParamTol)))
                ++bi;
            if (bi >= big.size() || big[bi].seg != iv.seg ||
                big[bi].lo > iv.lo + detail::kParamTol)
                return false;
        }
        return true;
    }

    bool dominated(int last, const Frontier& f, uint32_t used, uint32_t visited,
                   uint32_t discharged, int depth) {
        auto& entries = memo[static_cast<size_t>(last)];
        for (const auto& e : entries) {
            bool used_ok = (e.used & ~used) == 0;            // old used fewer-or-equal points
            bool visited_ok = (visited & ~e.visited) == 0;   // old visited at least as many
            bool discharged_ok = (discharged & ~e.discharged) == 0;
            if (used_ok && visited_ok && discharged_ok && e.depth <= depth &&
                frontier_contains(e.frontier, f))
                return true;
        }
        if (entries.size() < 512) entries.push_back({f, used, visited, discharged, depth});
        return false;
    }

    bool accept(int last, const Frontier& f, uint32_t visited, uint32_t discharged) const {
        if (opt.all_points && visited != (k >= 32 ? 0xffffffffu : ((1u << k) - 1))) return false;
        if (opt.require_closest_segment_visits &&
            discharged != (k >= 32 ? 0xffffffffu : ((1u << k) - 1)))
            return false;
        return closable(f, last);
    }

    bool dfs(int last, const Frontier& f, uint32_t used, uint32_t visited, uint32_t discharged,
             int depth) {
        if (accept(last, f, visited, discharged)) return true;
        if (depth >= max_len) return false;
        if (dominated(last, f, used, visited, discharged, depth)) return false;
        for (int t = 0; t < k; ++t) {
            if (!in_any_cylinder[static_cast<size_t>(t)]) continue;
            if (opt.unique && (used & (1u << t))) continue;
            Frontier next = step(f, last, t);
            if (next.empty()) continue;
            uint32_t used2 = used | (1u << t);
            uint32_t visited2 = visited | (1u << t);
            uint32_t discharged2 = discharged;
            if (opt.require_closest_segment_visits) {
                int cs = closest_segment[static_cast<size_t>(t)];
                if (cs >= 0 && touches_segment(next, cs)) discharged2 |= (1u << t);
            }
            if (dfs(t, next, used2, visited2, discharged2, depth + 1)) return true;
        }
        return false;
    }

    bool run() {
        if (n == 0) {
            bool any = false;
            for (int i = 0; i < k; ++i) {
                bool in = point_in_ball(s[i], p.start(), eps);
                if (in) any = true;
                if ((opt.all_points || opt.require_closest_segment_visits) && !in) return false;
            }
            return any;
        }
        for (int q0 = 0; q0 < k; ++q0) {
            if (!in_any_cylinder[static_cast<size_t>(q0)] && n > 0) continue;
            Frontier f = start_frontier(q0);
            if (f.empty()) continue;
            uint32_t discharged = 0;
            if (opt.require_closest_segment_visits) {
                int cs = closest_segment[static_cast<size_t>(q0)];
                if (cs >= 0 && touches_segment(f, cs)) discharged |= (1u << q0);
            }
            if (dfs(q0, f, 1u << q0, 1u << q0, discharged, 1)) return true;
        }
        return false;
    }
};

}  // namespace

bool brute_force_match_decide(const Curve& p, const PointSet& s, double eps,
                              const BruteForceOptions& opt) {
    if (s.size() > opt.cap)
        throw InstanceTooLarge("point set size " + std::to_string(s.size()) +
                               " exceeds brute-force cap " + std::to_string(opt.cap));
    if (s.size() >= 31) throw InstanceTooLarge("brute force supports at most 30 points");
    if (s.size() == 0 || eps < 0) return false;
    BruteSearch search(p, s, eps, opt);
    return search.run();
}

bool brute_force_subset_decide(const Curve& p, const PointSet& s, double eps, bool unique,
                               int cap) {
    BruteForceOptions opt;
    opt.cap = cap;
    opt.unique = unique;
    return brute_force_match_decide(p, s, eps, opt);
}

bool brute_force_allpoints_decide(const Curve& p, const PointSet& s, double eps, bool unique,
                                  int cap) {
    BruteForceOptions opt;
    opt.cap = cap;
    opt.unique = unique;
    opt.all_points = true;
    return brute_force_match_decide(p, s, eps, opt);
}

double brute_force_optimize(const Curve& p, const PointSet& s, double tol,
                            const BruteForceOptions& opt) {
    OptimizeResult r = optimize_by_candidates(p, s, tol, [&](double e) {
        DecideResult d;
        d.feasible = brute_force_match_decide(p, s, e, opt);
        if (d.feasible) d.witness = MatchWitness{};
        return d;
    });
    return r.eps;
}

}  // namespace curvematch
