#include "curvematch/frechet.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace curvematch {

namespace {

bool within(Point a, Point b, double eps) { return dist_sq(a, b) <= eps * eps + kSquaredTol; }

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

Curve::Curve(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("curve needs at least one vertex");
    for (const Point& v : vertices_) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw std::invalid_argument("curve vertices must be finite");
    }
}

Point Curve::at(CurvePos pos) const {
    if (segment_count() == 0) return vertices_.front();
    return segment(pos.seg).at(pos.t);
}

Curve Curve::slice(CurvePos a, CurvePos b) const {
    std::vector<Point> verts;
    verts.push_back(at(a));
    if (segment_count() > 0) {
        for (int v = a.seg + 1; v <= b.seg; ++v) {
            Point pv = vertex(v);
            if (dist_sq(pv, verts.back()) > 0.0) verts.push_back(pv);
        }
        Point pb = at(b);
        if (dist_sq(pb, verts.back()) > 0.0) verts.push_back(pb);
    }
    return Curve(std::move(verts));
}

Curve Curve::refined(int pieces) const {
    if (pieces <= 1 || segment_count() == 0) return *this;
    std::vector<Point> verts;
    verts.push_back(vertices_.front());
    for (int i = 0; i < segment_count(); ++i) {
        Segment s = segment(i);
        for (int j = 1; j <= pieces; ++j) verts.push_back(s.at(double(j) / pieces));
    }
    return Curve(std::move(verts));
}

double Curve::max_edge_length() const {
    double best = 0.0;
    for (int i = 0; i < segment_count(); ++i) best = std::max(best, segment(i).length());
    return best;
}

bool continuous_frechet_decide(const Curve& p, const Curve& q, double eps) {
    if (eps < 0) return false;
    const int n = p.segment_count();
    const int m = q.segment_count();

    if (!within(p.start(), q.start(), eps)) return false;
    if (!within(p.end(), q.end(), eps)) return false;

    const double eps_sq = eps * eps + kSquaredTol;
    if (n == 0) {
        for (const Point& v : q.vertices())
            if (dist_sq(p.start(), v) > eps_sq) return false;
        return true;
    }
    if (m == 0) {
        for (const Point& v : p.vertices())
            if (dist_sq(q.start(), v) > eps_sq) return false;
        return true;
    }

    // Reachability propagation over the free-space grid, column by column.
    // reach_left[j]: reachable part of the vertical boundary entering cell
    // (i, j) from the left; diag_bottom: reachable part of the diagram's
    // bottom edge (y = 0) under the current column.
    std::vector<Interval> reach_left(static_cast<size_t>(m));
    std::vector<Interval> next_left(static_cast<size_t>(m));

    // Left edge of the whole diagram (x = 0): reachable going straight up.
    {
        bool open = true;
        for (int j = 0; j < m; ++j) {
            Interval free = to_interval(ball_segment_intersection(q.segment(j), p.start(), eps));
            Interval r{};
            if (open && !free.empty() && free.lo <= 0.0) {
                r = {0.0, free.hi};
                if (free.hi < 1.0) open = false;
            } else {
                open = false;
            }
            reach_left[static_cast<size_t>(j)] = r;
        }
    }

    Interval diag_bottom;
    {
        Interval free = to_interval(ball_segment_intersection(p.segment(0), q.start(), eps));
        diag_bottom = (!free.empty() && free.lo <= 0.0) ? Interval{0.0, free.hi} : Interval{};
    }

    Interval top{};  // top boundary reach of the last processed cell
    for (int i = 0; i < n; ++i) {
        Interval bottom = diag_bottom;
        for (int j = 0; j < m; ++j) {
            const Interval rl = reach_left[static_cast<size_t>(j)];

            Interval right_free =
                to_interval(ball_segment_intersection(q.segment(j), p.vertex(i + 1), eps));
            Interval right{};
            if (!right_free.empty()) {
                if (!bottom.empty()) {
                    right = right_free;
                } else if (!rl.empty()) {
                    right = {std::max(right_free.lo, rl.lo), right_free.hi};
                    if (right.lo > right.hi) right = {};
                }
            }
            next_left[static_cast<size_t>(j)] = right;

            Interval top_free =
                to_interval(ball_segment_intersection(p.segment(i), q.vertex(j + 1), eps));
            top = Interval{};
            if (!top_free.empty()) {
                if (!rl.empty()) {
                    top = top_free;
                } else if (!bottom.empty()) {
                    top = {std::max(top_free.lo, bottom.lo), top_free.hi};
                    if (top.lo > top.hi) top = {};
                }
            }
            bottom = top;  // top of (i,j) is the bottom of (i,j+1)
        }
        std::swap(reach_left, next_left);
        if (i + 1 < n) {
            Interval free =
                to_interval(ball_segment_intersection(p.segment(i + 1), q.start(), eps));
            Interval next_diag{};
            if (!diag_bottom.empty() && diag_bottom.hi >= 1.0 && !free.empty() && free.lo <= 0.0)
                next_diag = {0.0, free.hi};
            diag_bottom = next_diag;
        }
    }
    // The end corner is reachable through the right boundary of the last
    // column or the top boundary of the last cell.
    const Interval last_right = reach_left[static_cast<size_t>(m - 1)];
    if (!last_right.empty() && last_right.hi >= 1.0) return true;
    if (!top.empty() && top.hi >= 1.0) return true;
    return false;
}

double continuous_frechet_value(const Curve& p, const Curve& q, double tol) {
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    if (continuous_frechet_decide(p, q, 0.0)) return 0.0;

    double hi = 0.0;
    for (const Point& a : p.vertices())
        for (const Point& b : q.vertices()) hi = std::max(hi, dist(a, b));

    std::vector<double> candidates;
    for (const Point& a : p.vertices())
        for (const Point& b : q.vertices()) candidates.push_back(dist(a, b));
    for (const Point& a : p.vertices())
        for (int j = 0; j < q.segment_count(); ++j)
            candidates.push_back(point_segment_distance(a, q.segment(j)));
    for (const Point& b : q.vertices())
        for (int i = 0; i < p.segment_count(); ++i)
            candidates.push_back(point_segment_distance(b, p.segment(i)));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                     candidates.end());

    // Binary search over candidates for the smallest feasible one.
    double lo = 0.0;
    {
        size_t a = 0, b = candidates.size();
        while (a < b) {
            size_t mid = (a + b) / 2;
            if (continuous_frechet_decide(p, q, candidates[mid]))
                b = mid;
            else
                a = mid + 1;
        }
        if (a < candidates.size()) hi = candidates[a];
        if (a > 0) lo = candidates[a - 1];
    }
    // Bisect below the best candidate; a candidate class may be missing.
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (continuous_frechet_decide(p, q, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

DiscreteFrechetResult discrete_frechet(const Curve& p, const Curve& q) {
    const int n = p.vertex_count();
    const int m = q.vertex_count();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> table(static_cast<size_t>(n) * m, inf);
    auto at = [&](int i, int j) -> double& { return table[static_cast<size_t>(i) * m + j]; };

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            double d = dist(p.vertex(i), q.vertex(j));
            double prev;
            if (i == 0 && j == 0)
                prev = 0.0;
            else {
                prev = inf;
                if (i > 0) prev = std::min(prev, at(i - 1, j));
                if (j > 0) prev = std::min(prev, at(i, j - 1));
                if (i > 0 && j > 0) prev = std::min(prev, at(i - 1, j - 1));
            }
            at(i, j) = std::max(d, prev);
        }
    }

    DiscreteFrechetResult result;
    result.value = at(n - 1, m - 1);
    // Greedy backtrack along minimizing predecessors.
    int i = n - 1, j = m - 1;
    std::vector<std::pair<int, int>> rev;
    rev.emplace_back(i, j);
    while (i > 0 || j > 0) {
        double best = inf;
        int bi = i, bj = j;
        if (i > 0 && j > 0 && at(i - 1, j - 1) <= best) best = at(i - 1, j - 1), bi = i - 1, bj = j - 1;
        if (i > 0 && at(i - 1, j) < best) best = at(i - 1, j), bi = i - 1, bj = j;
        if (j > 0 && at(i, j - 1) < best) best = at(i, j - 1), bi = i, bj = j - 1;
        i = bi;
        j = bj;
        rev.emplace_back(i, j);
    }
    result.coupling.steps.assign(rev.rbegin(), rev.rend());
    return result;
}

bool suffix_in_ball(const Curve& p, CurvePos pos, Point center, double eps) {
    const double eps_sq = eps * eps + kSquaredTol;
    if (p.segment_count() == 0) return dist_sq(p.start(), center) <= eps_sq;
    if (dist_sq(p.at(pos), center) > eps_sq) return false;
    for (int s = pos.seg; s < p.segment_count(); ++s) {
        Segment seg = p.segment(s);
        Point from = (s == pos.seg) ? p.at(pos) : seg.a;
        if (dist_sq(from, center) > eps_sq) return false;
        if (dist_sq(seg.b, center) > eps_sq) return false;
    }
    return true;
}

bool prefix_in_ball(const Curve& p, CurvePos pos, Point center, double eps) {
    const double eps_sq = eps * eps + kSquaredTol;
    if (p.segment_count() == 0) return dist_sq(p.start(), center) <= eps_sq;
    if (dist_sq(p.start(), center) > eps_sq) return false;
    for (int s = 0; s <= pos.seg && s < p.segment_count(); ++s) {
        Segment seg = p.segment(s);
        Point to = (s == pos.seg) ? p.at(pos) : seg.b;
        if (dist_sq(seg.a, center) > eps_sq) return false;
        if (dist_sq(to, center) > eps_sq) return false;
    }
    return true;
}

}  // namespace curvematch
