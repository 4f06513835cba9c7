#include "curvematch/geom.hpp"

#include <algorithm>

namespace curvematch {

double point_segment_distance_sq(Point p, const Segment& seg) {
    const Point d = seg.b - seg.a;
    const double len_sq = norm_sq(d);
    if (len_sq == 0.0) return dist_sq(p, seg.a);
    double t = dot(p - seg.a, d) / len_sq;
    t = std::clamp(t, 0.0, 1.0);
    return dist_sq(p, seg.at(t));
}

double point_segment_distance(Point p, const Segment& seg) {
    return std::sqrt(point_segment_distance_sq(p, seg));
}

std::optional<ParamInterval> ball_segment_intersection(const Segment& seg, Point center,
                                                       double eps) {
    const Point d = seg.b - seg.a;
    const double len_sq = norm_sq(d);
    const double eps_sq = eps * eps;

    if (len_sq == 0.0) {
        if (dist_sq(seg.a, center) <= eps_sq + kSquaredTol) return ParamInterval{0.0, 1.0, 0};
        return std::nullopt;
    }

    // Solve |seg(u) - center|^2 = eps^2: len_sq*u^2 + 2*m*u + c0 = 0.
    const Point rel = seg.a - center;
    const double m = dot(d, rel);
    const double c0 = norm_sq(rel) - eps_sq;
    const double disc = m * m - len_sq * c0;

    if (disc < 0.0) {
        // Possibly tangent within tolerance at the interior minimum.
        double u = std::clamp(-m / len_sq, 0.0, 1.0);
        if (dist_sq(seg.at(u), center) <= eps_sq + kSquaredTol) return ParamInterval{u, u, 0};
        return std::nullopt;
    }

    const double root = std::sqrt(disc);
    const double u1 = (-m - root) / len_sq;
    const double u2 = (-m + root) / len_sq;

    if (u2 < 0.0) {
        if (dist_sq(seg.a, center) <= eps_sq + kSquaredTol) return ParamInterval{0.0, 0.0, 0};
        return std::nullopt;
    }
    if (u1 > 1.0) {
        if (dist_sq(seg.b, center) <= eps_sq + kSquaredTol) return ParamInterval{1.0, 1.0, 0};
        return std::nullopt;
    }
    return ParamInterval{std::max(u1, 0.0), std::min(u2, 1.0), 0};
}

bool in_cylinder(Point p, const Segment& seg, double eps) {
    return point_segment_distance_sq(p, seg) <= eps * eps + kSquaredTol;
}

FreeSpaceCell free_space_cell(const Segment& p_edge, const Segment& q_edge, double eps) {
    FreeSpaceCell cell;
    cell.bottom = ball_segment_intersection(p_edge, q_edge.a, eps);
    cell.top = ball_segment_intersection(p_edge, q_edge.b, eps);
    cell.left = ball_segment_intersection(q_edge, p_edge.a, eps);
    cell.right = ball_segment_intersection(q_edge, p_edge.b, eps);
    return cell;
}

}  // namespace curvematch
