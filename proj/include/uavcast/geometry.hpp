#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace uavcast {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
};

inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }
inline double dist2(const Vec2& a, const Vec2& b) { return (a - b).norm2(); }

inline Vec2 lerp(const Vec2& a, const Vec2& b, double t) {
    return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

inline double polyline_length(std::span<const Vec2> pts) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += dist(pts[i - 1], pts[i]);
    return len;
}

struct BoundingBox {
    Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

    void expand(const Vec2& p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double perimeter() const { return 2.0 * (width() + height()); }
    double diagonal() const { return dist(lo, hi); }
};

inline BoundingBox bounding_box(std::span<const Vec2> pts) {
    BoundingBox box;
    for (const auto& p : pts) box.expand(p);
    return box;
}

/// Indices of the convex hull vertices in counter-clockwise order
/// (Andrew monotone chain; collinear interior points are dropped).
inline std::vector<int> convex_hull(std::span<const Vec2> pts) {
    const int n = static_cast<int>(pts.size());
    if (n <= 2) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return all;
    }
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        return pts[a].y < pts[b].y;
    });
    auto turn = [&](int o, int a, int b) {
        return (pts[a] - pts[o]).cross(pts[b] - pts[o]);
    };
    std::vector<int> hull(2 * n);
    int k = 0;
    for (int ii = 0; ii < n; ++ii) {
        int i = idx[ii];
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], i) <= 0) --k;
        hull[k++] = i;
    }
    for (int ii = n - 2, lower = k + 1; ii >= 0; --ii) {
        int i = idx[ii];
        while (k >= lower && turn(hull[k - 2], hull[k - 1], i) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

struct Circle {
    Vec2 center;
    double radius = 0.0;
    bool contains(const Vec2& p, double tol = 1e-9) const { return dist(center, p) <= radius + tol; }
};

namespace detail {

inline Circle circle_from(const Vec2& a, const Vec2& b) {
    return {lerp(a, b, 0.5), 0.5 * dist(a, b)};
}

inline Circle circle_from(const Vec2& a, const Vec2& b, const Vec2& c) {
    const Vec2 ab = b - a, ac = c - a;
    const double d = 2.0 * ab.cross(ac);
    if (std::abs(d) < 1e-30) {
        // collinear: fall back to the widest pair
        Circle best = circle_from(a, b);
        for (const Circle& cand : {circle_from(a, c), circle_from(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    const double ab2 = ab.norm2(), ac2 = ac.norm2();
    const Vec2 center{a.x + (ac.y * ab2 - ab.y * ac2) / d,
                      a.y + (ab.x * ac2 - ac.x * ab2) / d};
    return {center, dist(center, a)};
}

}  // namespace detail

/// Smallest circle enclosing all points (Welzl move-to-front, deterministic).
inline Circle smallest_enclosing_circle(std::span<const Vec2> pts) {
    std::vector<Vec2> p(pts.begin(), pts.end());
    const std::size_t n = p.size();
    if (n == 0) return {};
    if (n == 1) return {p[0], 0.0};
    Circle c = detail::circle_from(p[0], p[1]);
    const double eps = 1e-9;
    for (std::size_t i = 2; i < n; ++i) {
        if (c.contains(p[i], eps * (1.0 + c.radius))) continue;
        c = {p[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (c.contains(p[j], eps * (1.0 + c.radius))) continue;
            c = detail::circle_from(p[i], p[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (!c.contains(p[k], eps * (1.0 + c.radius)))
                    c = detail::circle_from(p[i], p[j], p[k]);
            }
        }
    }
    return c;
}

/// Intersection points of two circles of equal radius r centered at a and b.
/// Empty when the circles are disjoint or coincident; a tangent pair yields
/// the single midpoint.
inline std::vector<Vec2> equal_circle_intersections(const Vec2& a, const Vec2& b, double r) {
    std::vector<Vec2> out;
    const double d = dist(a, b);
    if (d < 1e-12 || d > 2.0 * r) return out;
    const Vec2 mid = lerp(a, b, 0.5);
    const double h2 = r * r - 0.25 * d * d;
    if (h2 <= 0.0) {
        out.push_back(mid);
        return out;
    }
    const double h = std::sqrt(h2);
    const Vec2 dir = (b - a) / d;
    const Vec2 perp{-dir.y, dir.x};
    out.push_back(mid + perp * h);
    out.push_back(mid - perp * h);
    return out;
}

}  // namespace uavcast
