#pragma once

#include <vector>

#include "twt/channel.hpp"

namespace twt {

/// A rate point in bits per channel use.
struct RatePair {
    double r_1 = 0.0;
    double r_2 = 0.0;
};

/// A transmit power point inside the power box of a governing channel.
struct PowerPoint {
    double p_1 = 0.0;
    double p_2 = 0.0;
};

/// Convex polygon in the first quadrant, vertices counterclockwise starting
/// at (0,0).  Degenerate cases: a single vertex (point) or two vertices
/// (segment on an axis).
struct RegionPolytope {
    std::vector<RatePair> vertices;
};

enum class RegionShape { Point, Segment, Triangle, Quadrilateral, Rectangle, Pentagon };

const char* to_string(RegionShape s);
RegionShape classify(const RegionPolytope& region);

/// Intersection of the box [0,c1] x [0,c2] with the half-plane x + y <= s,
/// built analytically from at most five candidate vertices; coincident
/// vertices are deduplicated with absolute tolerance 1e-12.
RegionPolytope capped_region(double c_1, double c_2, double s);

/// Achievable secrecy region at a fixed power point: R_k <= g(p_k) and
/// R_1 + R_2 <= [g(p_1) + g(p_2) - g(h_1 p_1 + h_2 p_2)]^+.
/// Throws std::domain_error if p lies outside the channel's power box.
RegionPolytope gtw_region_at_power(const StandardGtwChannel& ch, PowerPoint p);

/// Achievable secrecy region of the binary channel: R_k <= 1 - h(eps_k) and
/// R_1 + R_2 <= [1 + h(eps_w) - h(eps_1) - h(eps_2)]^+.
RegionPolytope batw_region(const BatwChannel& ch);

/// Convex closure of the union of at-power regions over a grid x grid
/// uniform power lattice (both endpoints included per axis). grid >= 2.
RegionPolytope gtw_region_closure(const StandardGtwChannel& ch, int grid);

/// Half-plane test against each edge: true iff r is inside the polygon or
/// within distance tol of its boundary.
bool contains(const RegionPolytope& region, RatePair r, double tol);

/// Unclamped secrecy sum-rate g(p_1) + g(p_2) - g(h_1 p_1 + h_2 p_2) in
/// bits per use; may be negative.  Throws std::domain_error outside the box.
double sum_rate(const StandardGtwChannel& ch, PowerPoint p);

/// rho(p) = (1 + h_1 p_1 + h_2 p_2) / ((1 + p_1)(1 + p_2)); the sum-rate
/// equals -0.5*log2(rho).
double rho(const StandardGtwChannel& ch, PowerPoint p);

/// 2-D convex hull (Andrew monotone chain, collinear points dropped),
/// counterclockwise starting from the lexicographically smallest point.
std::vector<RatePair> convex_hull(std::vector<RatePair> points);

}  // namespace twt
