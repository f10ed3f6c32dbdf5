#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "uavcast/errors.hpp"
#include "uavcast/geometry.hpp"

namespace uavcast {

/// Intersection of closed radius-D disks around a cluster's GTs: every point
/// inside keeps the whole cluster simultaneously in connection.
struct ConnectionRegion {
    std::vector<int> member_gts;
    std::vector<Vec2> centers;
    double radius_D = 0.0;
    Vec2 interior_point;  // guaranteed member (minimax center of the GTs)

    bool contains(const Vec2& q, double tol = 1e-9) const {
        for (const auto& c : centers)
            if (dist(q, c) > radius_D + tol) return false;
        return true;
    }

    /// Euclidean projection onto the region via cyclic Dykstra iterations.
    Vec2 project(const Vec2& q) const {
        if (contains(q)) return q;
        Vec2 x = q;
        std::vector<Vec2> corrections(centers.size(), Vec2{0.0, 0.0});
        constexpr int kMaxCycles = 10000;
        for (int cycle = 0; cycle < kMaxCycles; ++cycle) {
            const Vec2 cycle_start = x;
            for (std::size_t i = 0; i < centers.size(); ++i) {
                const Vec2 y = x + corrections[i];
                Vec2 projected = y;
                const double d = dist(y, centers[i]);
                if (d > radius_D)
                    projected = centers[i] + (y - centers[i]) * (radius_D / d);
                corrections[i] = y - projected;
                x = projected;
            }
            if (dist(cycle_start, x) < 1e-6 && contains(x, 1e-6)) return x;
        }
        throw solver_failure_error("Dykstra projection did not converge within 1e4 cycles");
    }
};

/// Virtual-base-station cover: every GT lies within radius_D of at least one
/// VBS; clusters[g] lists the GTs assigned to VBS g (first coverer wins).
struct CoveragePlan {
    std::vector<Vec2> vbs_locations;
    std::vector<std::vector<int>> clusters;
    double radius_D = 0.0;

    void validate(std::span<const Vec2> gts) const {
        std::vector<char> seen(gts.size(), 0);
        for (std::size_t g = 0; g < clusters.size(); ++g) {
            for (int k : clusters[g]) {
                if (k < 0 || k >= static_cast<int>(gts.size()))
                    throw invalid_parameters_error("cluster references an unknown GT");
                if (dist(gts[k], vbs_locations[g]) > radius_D + 1e-9)
                    throw invalid_parameters_error("GT assigned to a VBS beyond the cover radius");
                seen[k] = 1;
            }
        }
        for (std::size_t k = 0; k < gts.size(); ++k)
            if (!seen[k]) throw invalid_parameters_error("GT not covered by any VBS");
    }
};

namespace detail {

inline double polar_angle(const Vec2& from, const Vec2& to) {
    double a = std::atan2(to.y - from.y, to.x - from.x);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return a;
}

}  // namespace detail

/// Boundary-first greedy disk cover.  Each round anchors on the uncovered GT
/// that sits on the hull of the uncovered set with the smallest polar angle
/// from their centroid, then places the VBS at the candidate point (uncovered
/// GT locations plus pairwise radius-D circle intersections, restricted to
/// those covering the anchor) that covers the most uncovered GTs.  Ties break
/// toward the centroid, then by candidate order.  Deterministic.
inline CoveragePlan place_vbs(std::span<const Vec2> gts, double D) {
    if (!(D >= 0.0)) throw invalid_parameters_error("cover radius must be >= 0");
    CoveragePlan plan;
    plan.radius_D = D;
    const int n = static_cast<int>(gts.size());
    std::vector<char> covered(n, 0);
    std::vector<int> uncovered;
    uncovered.reserve(n);

    auto refresh_uncovered = [&] {
        uncovered.clear();
        for (int k = 0; k < n; ++k)
            if (!covered[k]) uncovered.push_back(k);
    };

    refresh_uncovered();
    while (!uncovered.empty()) {
        Vec2 centroid{0.0, 0.0};
        std::vector<Vec2> pts;
        pts.reserve(uncovered.size());
        for (int k : uncovered) {
            pts.push_back(gts[k]);
            centroid += gts[k];
        }
        centroid = centroid / static_cast<double>(uncovered.size());

        int anchor = uncovered.front();
        double best_angle = std::numeric_limits<double>::infinity();
        for (int h : convex_hull(pts)) {
            const int k = uncovered[h];
            const double ang = detail::polar_angle(centroid, gts[k]);
            if (ang < best_angle - 1e-15 ||
                (std::abs(ang - best_angle) <= 1e-15 && k < anchor)) {
                best_angle = ang;
                anchor = k;
            }
        }

        // candidate VBS centers that keep the anchor covered
        std::vector<Vec2> candidates;
        for (int k : uncovered)
            if (dist(gts[k], gts[anchor]) <= D + 1e-9) candidates.push_back(gts[k]);
        for (std::size_t i = 0; i < uncovered.size(); ++i)
            for (std::size_t j = i + 1; j < uncovered.size(); ++j)
                for (const Vec2& c : equal_circle_intersections(gts[uncovered[i]], gts[uncovered[j]], D))
                    if (dist(c, gts[anchor]) <= D + 1e-9) candidates.push_back(c);

        Vec2 best = gts[anchor];
        int best_cover = -1;
        double best_centroid_dist = 0.0;
        for (const Vec2& c : candidates) {
            int cover = 0;
            for (int k : uncovered)
                if (dist(c, gts[k]) <= D + 1e-9) ++cover;
            const double cd = dist(c, centroid);
            if (cover > best_cover || (cover == best_cover && cd < best_centroid_dist - 1e-12)) {
                best_cover = cover;
                best = c;
                best_centroid_dist = cd;
            }
        }

        std::vector<int> cluster;
        for (int k : uncovered) {
            if (dist(best, gts[k]) <= D + 1e-9) {
                cluster.push_back(k);
                covered[k] = 1;
            }
        }
        plan.vbs_locations.push_back(best);
        plan.clusters.push_back(std::move(cluster));
        refresh_uncovered();
    }
    plan.validate(gts);
    return plan;
}

/// Region for one cluster; throws infeasible_cluster_error when the disks
/// have empty intersection (minimax radius of the members exceeds D).
inline ConnectionRegion build_region(std::span<const Vec2> gts, const std::vector<int>& members,
                                     double D) {
    if (members.empty()) throw invalid_parameters_error("region needs at least one member GT");
    ConnectionRegion region;
    region.member_gts = members;
    region.radius_D = D;
    for (int k : members) {
        if (k < 0 || k >= static_cast<int>(gts.size()))
            throw invalid_parameters_error("region references an unknown GT");
        region.centers.push_back(gts[k]);
    }
    const Circle minimax = smallest_enclosing_circle(region.centers);
    if (minimax.radius > D + 1e-9)
        throw infeasible_cluster_error("cluster disks have empty intersection");
    region.interior_point = minimax.center;
    return region;
}

/// Apply the routing order to the clusters (tour indices into the plan).
inline CoveragePlan reorder_clusters(const CoveragePlan& plan, const std::vector<int>& order) {
    if (order.size() != plan.vbs_locations.size())
        throw invalid_parameters_error("order length must match VBS count");
    CoveragePlan out;
    out.radius_D = plan.radius_D;
    for (int g : order) {
        out.vbs_locations.push_back(plan.vbs_locations.at(g));
        out.clusters.push_back(plan.clusters.at(g));
    }
    return out;
}

}  // namespace uavcast
