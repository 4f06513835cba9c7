#pragma once

#include <utility>
#include <vector>

#include "curvematch/geom.hpp"

namespace curvematch {

// Position along a polyline curve: parameter t in [0,1] on segment seg.
struct CurvePos {
    int seg = 0;
    double t = 0.0;

    double global() const { return seg + t; }
    friend bool operator<(const CurvePos& a, const CurvePos& b) {
        return a.global() < b.global();
    }
};

class Curve {
public:
    Curve() = default;
    explicit Curve(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    const Point& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int segment_count() const { return static_cast<int>(vertices_.size()) - 1; }
    Segment segment(int i) const {
        return {vertices_[static_cast<size_t>(i)], vertices_[static_cast<size_t>(i) + 1]};
    }

    Point start() const { return vertices_.front(); }
    Point end() const { return vertices_.back(); }
    Point at(CurvePos pos) const;

    // Sub-curve between two positions, a <= b. Always has >= 1 vertex.
    Curve slice(CurvePos a, CurvePos b) const;

    // Every edge of the curve split into pieces equal parts.
    Curve refined(int pieces) const;

    double max_edge_length() const;

private:
    std::vector<Point> vertices_;
};

// Monotone coupling between vertex sequences; steps advance i, j, or both.
struct Coupling {
    std::vector<std::pair<int, int>> steps;
};

// Decision version of the continuous Frechet distance (free-space reachability).
bool continuous_frechet_decide(const Curve& p, const Curve& q, double eps);

// Value to within tol: returns e with decide(e) true and decide(e - tol) false.
double continuous_frechet_value(const Curve& p, const Curve& q, double tol);

struct DiscreteFrechetResult {
    double value = 0.0;
    Coupling coupling;
};

DiscreteFrechetResult discrete_frechet(const Curve& p, const Curve& q);

// True iff the whole sub-curve from pos to the end stays inside B(center, eps).
bool suffix_in_ball(const Curve& p, CurvePos pos, Point center, double eps);

// True iff the sub-curve from the start up to pos stays inside B(center, eps).
bool prefix_in_ball(const Curve& p, CurvePos pos, Point center, double eps);

}  // namespace curvematch
