#include "twt/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twt/info.hpp"

namespace twt {

namespace {

constexpr double kVertexTol = 1e-12;

bool close(const RatePair& a, const RatePair& b) {
    return std::abs(a.r_1 - b.r_1) <= kVertexTol && std::abs(a.r_2 - b.r_2) <= kVertexTol;
}

double cross(const RatePair& o, const RatePair& a, const RatePair& b) {
    return (a.r_1 - o.r_1) * (b.r_2 - o.r_2) - (a.r_2 - o.r_2) * (b.r_1 - o.r_1);
}

void check_in_box(const StandardGtwChannel& ch, PowerPoint p) {
    if (!(p.p_1 >= 0.0 && p.p_1 <= ch.pmax_1 && p.p_2 >= 0.0 && p.p_2 <= ch.pmax_2))
        throw std::domain_error("power point outside the channel's power box");
}

double dist_point(const RatePair& a, const RatePair& b) {
    return std::hypot(a.r_1 - b.r_1, a.r_2 - b.r_2);
}

double dist_segment(const RatePair& a, const RatePair& b, const RatePair& r) {
    const double dx = b.r_1 - a.r_1, dy = b.r_2 - a.r_2;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return dist_point(a, r);
    double t = ((r.r_1 - a.r_1) * dx + (r.r_2 - a.r_2) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist_point({a.r_1 + t * dx, a.r_2 + t * dy}, r);
}

}  // namespace

const char* to_string(RegionShape s) {
    switch (s) {
        case RegionShape::Point: return "point";
        case RegionShape::Segment: return "segment";
        case RegionShape::Triangle: return "triangle";
        case RegionShape::Quadrilateral: return "quadrilateral";
        case RegionShape::Rectangle: return "rectangle";
        case RegionShape::Pentagon: return "pentagon";
    }
    return "?";
}

RegionShape classify(const RegionPolytope& region) {
    const auto& v = region.vertices;
    switch (v.size()) {
        case 1: return RegionShape::Point;
        case 2: return RegionShape::Segment;
        case 3: return RegionShape::Triangle;
        case 4: {
            // Axis-aligned box (0,0),(a,0),(a,b),(0,b) counts as a rectangle.
            const bool box = std::abs(v[1].r_2) <= kVertexTol &&
                             std::abs(v[1].r_1 - v[2].r_1) <= kVertexTol &&
                             std::abs(v[2].r_2 - v[3].r_2) <= kVertexTol &&
                             std::abs(v[3].r_1) <= kVertexTol;
            return box ? RegionShape::Rectangle : RegionShape::Quadrilateral;
        }
        case 5: return RegionShape::Pentagon;
        default:
            throw std::invalid_argument("classify: more than five vertices (not an at-power shape)");
    }
}

RegionPolytope capped_region(double c_1, double c_2, double s) {
    RegionPolytope out;
    auto& v = out.vertices;
    v.push_back({0.0, 0.0});
    if (s > 0.0) {
        if (s >= c_1 + c_2) {
            v.push_back({c_1, 0.0});
            v.push_back({c_1, c_2});
            v.push_back({0.0, c_2});
        } else {
            v.push_back({std::min(c_1, s), 0.0});
            if (s > c_1) v.push_back({c_1, s - c_1});
            if (s > c_2) v.push_back({s - c_2, c_2});
            v.push_back({0.0, std::min(c_2, s)});
        }
    }
    // Drop coincident neighbors (including the wrap-around pair).
    std::vector<RatePair> dedup;
    for (const auto& p : v)
        if (dedup.empty() || !close(dedup.back(), p)) dedup.push_back(p);
    while (dedup.size() > 1 && close(dedup.front(), dedup.back())) dedup.pop_back();
    out.vertices = std::move(dedup);
    return out;
}

RegionPolytope gtw_region_at_power(const StandardGtwChannel& ch, PowerPoint p) {
    check_in_box(ch, p);
    const double c_1 = gauss_cap(p.p_1);
    const double c_2 = gauss_cap(p.p_2);
    const double s = pos_part(sum_rate(ch, p));
    return capped_region(c_1, c_2, s);
}

RegionPolytope batw_region(const BatwChannel& ch) {
    validate_batw(ch);
    const double c_1 = 1.0 - bin_entropy(ch.eps_1);
    const double c_2 = 1.0 - bin_entropy(ch.eps_2);
    const double s =
        pos_part(1.0 + bin_entropy(ch.eps_w) - bin_entropy(ch.eps_1) - bin_entropy(ch.eps_2));
    return capped_region(c_1, c_2, s);
}

std::vector<RatePair> convex_hull(std::vector<RatePair> points) {
    std::sort(points.begin(), points.end(), [](const RatePair& a, const RatePair& b) {
        return a.r_1 != b.r_1 ? a.r_1 < b.r_1 : a.r_2 < b.r_2;
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const RatePair& a, const RatePair& b) { return close(a, b); }),
                 points.end());
    const size_t n = points.size();
    if (n <= 2) return points;

    std::vector<RatePair> hull;
    hull.reserve(2 * n);
    // Lower hull, then upper hull; popping on cross <= tol drops collinear
    // points.  Result is counterclockwise from the lexicographic minimum.
    for (const auto& p : points) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= kVertexTol)
            hull.pop_back();
        hull.push_back(p);
    }
    const size_t lower = hull.size();
    for (size_t i = n - 1; i-- > 0;) {
        const auto& p = points[i];
        while (hull.size() > lower && cross(hull[hull.size() - 2], hull.back(), p) <= kVertexTol)
            hull.pop_back();
        hull.push_back(p);
    }
    hull.pop_back();  // last point repeats the first
    return hull;
}

RegionPolytope gtw_region_closure(const StandardGtwChannel& ch, int grid) {
    validate(ch);
    if (grid < 2) throw std::invalid_argument("grid: must be >= 2");
    const auto lattice = [grid](double pmax, int i) {
        return i == grid - 1 ? pmax : pmax * i / (grid - 1);
    };
    std::vector<RatePair> cloud;
    cloud.reserve(static_cast<size_t>(grid) * grid * 5);
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const PowerPoint p{lattice(ch.pmax_1, i), lattice(ch.pmax_2, j)};
            const auto sub = gtw_region_at_power(ch, p);
            cloud.insert(cloud.end(), sub.vertices.begin(), sub.vertices.end());
        }
    }
    RegionPolytope out;
    out.vertices = convex_hull(std::move(cloud));
    return out;
}

bool contains(const RegionPolytope& region, RatePair r, double tol) {
    const auto& v = region.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return dist_point(v[0], r) <= tol;
    if (v.size() == 2) return dist_segment(v[0], v[1], r) <= tol;
    for (size_t i = 0; i < v.size(); ++i) {
        const RatePair& a = v[i];
        const RatePair& b = v[(i + 1) % v.size()];
        const double len = dist_point(a, b);
        if (len == 0.0) continue;
        if (cross(a, b, r) / len < -tol) return false;
    }
    return true;
}

double rho(const StandardGtwChannel& ch, PowerPoint p) {
    return (1.0 + ch.h_1 * p.p_1 + ch.h_2 * p.p_2) / ((1.0 + p.p_1) * (1.0 + p.p_2));
}

double sum_rate(const StandardGtwChannel& ch, PowerPoint p) {
    check_in_box(ch, p);
    return gauss_cap(p.p_1) + gauss_cap(p.p_2) - gauss_cap(ch.h_1 * p.p_1 + ch.h_2 * p.p_2);
}

}  // namespace twt
