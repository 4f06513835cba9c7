#pragma once

#include <optional>
#include <vector>

#include "curvematch/cpsm.hpp"

namespace curvematch::detail {

inline constexpr double kParamTol = 1e-12;

// Chords of every point's ball against every curve segment.
struct ChordTable {
    int n = 0;
    int k = 0;
    std::vector<std::optional<ParamInterval>> chords;  // [s * n + i]

    const std::optional<ParamInterval>& chord(int s, int i) const {
        return chords[static_cast<size_t>(s) * n + i];
    }

    static ChordTable build(const Curve& p, const PointSet& s, double eps);
};

struct TopReach {
    int seg = 0;
    double lo = 0.0;  // leftmost reachable parameter on the top boundary
};

// Walks the free-space row of the candidate edge qa->qb against P's segments
// seed.seg .. cap (inclusive). The walk is seeded on the bottom boundary at
// `seed`, which must lie inside B(qa, eps). Appends one entry per cell whose
// top boundary is reachable.
void row_walk(const Curve& p, Point qa, Point qb, const ChordTable& chords, int qa_idx,
              int qb_idx, double eps, CurvePos seed, int cap, std::vector<TopReach>& out);

// Infimum position q such that the sub-curve from q to the end of P stays in
// B(center, eps); +infinity when no such position exists.
double suffix_cover_start(const Curve& p, const ChordTable& chords, int point, Point center,
                          double eps);

}  // namespace curvematch::detail
