#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvematch/frechet.hpp"

namespace curvematch {

struct PointSet {
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }
    const Point& operator[](int i) const { return points[static_cast<size_t>(i)]; }
};

struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// One visit of a point: the matched prefix of P can end at `position` on
// segment `segment` while the matched prefix of Q ends at point `point`.
struct VisitStep {
    int point = 0;
    int segment = 0;
    double position = 0.0;
};

struct MatchWitness {
    std::vector<int> q_vertices;
    std::vector<VisitStep> visits;
};

struct DecideResult {
    bool feasible = false;
    std::optional<MatchWitness> witness;
};

struct OptimizeResult {
    double eps = 0.0;
    MatchWitness witness;
};

// Every vertex ball of P must contain a point of S.
DecideResult discrete_subset_decide(const Curve& p, const PointSet& s, double eps);

// Additionally every point of S must lie in some vertex ball.
DecideResult discrete_allpoints_decide(const Curve& p, const PointSet& s, double eps);

// r(i, s, t): largest segment index j >= i such that a visit of s at segment i
// (taken at the leftmost point of segment i inside B(s, eps)) extends along
// the segment s->t to a visit of t at segment j; -1 when no extension exists.
// Segment indices are 0-based.
class ReachTable {
public:
    ReachTable() = default;
    ReachTable(int n, int k) : n_(n), k_(k), r_(static_cast<size_t>(n) * k * k, -1) {}

    int n() const { return n_; }
    int k() const { return k_; }
    int at(int i, int s, int t) const { return r_[index(i, s, t)]; }
    void set(int i, int s, int t, int value) { r_[index(i, s, t)] = value; }

private:
    size_t index(int i, int s, int t) const {
        return (static_cast<size_t>(i) * k_ + s) * k_ + t;
    }
    int n_ = 0;
    int k_ = 0;
    std::vector<int> r_;
};

ReachTable reachability_table(const Curve& p, const PointSet& s, double eps);

// Is there a curve Q with vertices from S (repeats and omissions allowed)
// with Frechet distance at most eps from P?
DecideResult continuous_subset_decide(const Curve& p, const PointSet& s, double eps);

// Smallest eps (to within tol) for which continuous_subset_decide holds.
OptimizeResult continuous_subset_optimize(const Curve& p, const PointSet& s, double tol);

// Candidate critical values: point-vertex distances, point-segment distances,
// vertex-to-candidate-edge distances, and chord alignment events. Sorted,
// deduplicated within 1e-12.
std::vector<double> critical_eps_candidates(const Curve& p, const PointSet& s);

struct BruteForceOptions {
    int cap = 9;
    bool unique = false;
    bool all_points = false;
    // Oracle mode for the restricted variant: every point must additionally be
    // visited at its closest segment.
    bool require_closest_segment_visits = false;
};

// Exhaustive backtracking over vertex sequences, pruned by cylinder
// membership and incremental free-space reachability.
bool brute_force_match_decide(const Curve& p, const PointSet& s, double eps,
                              const BruteForceOptions& opt);

bool brute_force_subset_decide(const Curve& p, const PointSet& s, double eps, bool unique,
                               int cap = 9);
bool brute_force_allpoints_decide(const Curve& p, const PointSet& s, double eps, bool unique,
                                  int cap = 7);

// Smallest feasible eps (to within tol) under brute_force_match_decide.
double brute_force_optimize(const Curve& p, const PointSet& s, double tol,
                            const BruteForceOptions& opt);

}  // namespace curvematch
