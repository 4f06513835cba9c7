#pragma once

#include <vector>

#include "curvematch/cpsm.hpp"

namespace curvematch {

// Per-segment point sets at a given eps. Segment indices are 0-based; the
// start/end balls are kept separately.
struct SegmentPointSets {
    std::vector<std::vector<int>> in_cylinder;  // points of S inside cylinder i
    std::vector<std::vector<int>> essential;    // points whose closest segment is i
    std::vector<int> start_ball;                // points within eps of start(P)
    std::vector<int> end_ball;                  // points within eps of end(P)
    std::vector<int> closest_segment;           // per point; -1 if inside no cylinder
};

SegmentPointSets compute_point_sets(const Curve& p, const PointSet& s, double eps);

// False iff some point lies outside every cylinder, or an endpoint ball is empty.
bool preprocess_feasible(const SegmentPointSets& sets);

struct EntryExitSets {
    std::vector<std::vector<int>> entry;
    std::vector<std::vector<int>> exit;
    std::vector<std::vector<char>> entry_member;  // [segment][point]
    std::vector<std::vector<char>> exit_member;
};

EntryExitSets entry_exit_sets(const Curve& p, const PointSet& s, double eps,
                              const SegmentPointSets& sets);

// e[i] = first segment after i with a nonempty essential set; n when none.
std::vector<int> first_essential_after(const SegmentPointSets& sets);

// The restriction-respecting modification of the reachability table.
ReachTable modify_reachability(const ReachTable& r, const Curve& p, const PointSet& s,
                               double eps, const SegmentPointSets& sets,
                               const EntryExitSets& ee, const std::vector<int>& e);

// Decides whether a curve on S can visit every point at its closest segment
// while staying within Frechet distance eps of P.
DecideResult restricted_allpoints_decide(const Curve& p, const PointSet& s, double eps);

OptimizeResult restricted_allpoints_optimize(const Curve& p, const PointSet& s, double tol);

struct ApproxCertificate {
    double eps_hat = 0.0;
    double tol = 0.0;
    // True when no point lies in more than one cylinder at eps_hat, in which
    // case the result is optimal for the unrestricted problem as well.
    bool optimal = false;
};

struct ApproxResult {
    double eps_hat = 0.0;
    MatchWitness witness;
    ApproxCertificate certificate;
};

// 3-approximation for the unrestricted non-unique all-points problem.
ApproxResult approx_allpoints(const Curve& p, const PointSet& s, double tol);

}  // namespace curvematch
