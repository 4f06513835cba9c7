#pragma once

#include <cmath>
#include <optional>

namespace curvematch {

// Absolute tolerance on squared distances. Tangency cases (points placed
// exactly on ball/cylinder boundaries) must resolve as feasible.
inline constexpr double kSquaredTol = 1e-12;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm_sq(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::sqrt(norm_sq(a)); }
inline double dist_sq(Point a, Point b) { return norm_sq(a - b); }
inline double dist(Point a, Point b) { return std::sqrt(dist_sq(a, b)); }

struct Segment {
    Point a;
    Point b;

    Point at(double t) const { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }
    double length() const { return dist(a, b); }
};

// Sub-interval of one curve segment in [0,1] parameters.
struct ParamInterval {
    double lo = 0.0;
    double hi = 0.0;
    int segment_index = 0;

    bool degenerate() const { return lo == hi; }
};

// Distance from p to the closed segment (project onto the line, clamp).
double point_segment_distance(Point p, const Segment& seg);
double point_segment_distance_sq(Point p, const Segment& seg);

// Parameter interval of seg inside the closed ball B(center, eps), or absent
// if the intersection is empty. Tangency resolves as a degenerate interval.
std::optional<ParamInterval> ball_segment_intersection(const Segment& seg, Point center,
                                                       double eps);

// True iff p lies in the closed cylinder of radius eps around seg.
bool in_cylinder(Point p, const Segment& seg, double eps);

// Free portions of the four boundaries of one free-space cell. The cell pairs
// p_edge (horizontal axis, parameter u) with q_edge (vertical axis, v):
//   bottom/top: intervals of u where the p_edge point is within eps of
//               q_edge's start/end;
//   left/right: intervals of v where q_edge points are within eps of
//               p_edge's start/end.
struct FreeSpaceCell {
    std::optional<ParamInterval> left;
    std::optional<ParamInterval> right;
    std::optional<ParamInterval> bottom;
    std::optional<ParamInterval> top;
};

FreeSpaceCell free_space_cell(const Segment& p_edge, const Segment& q_edge, double eps);

}  // namespace curvematch
