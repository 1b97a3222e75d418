#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace qrpoly {

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec3 a, Vec3 b) { return norm(a - b); }

/// Rotate a point counter-clockwise by `angle` radians.
inline Vec2 rotate(Vec2 p, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Polar angle normalized to [0, 2*pi); angles within 1e-12 of 2*pi wrap to 0.
inline double polar_angle(Vec2 p) {
    double a = std::atan2(p.y, p.x);
    if (a < 0.0) a += 2.0 * kPi;
    if (a > 2.0 * kPi - 1e-12) a = 0.0;
    return a;
}

double signed_area(const std::vector<Vec2>& poly);

/// Interior angles of a closed polygon, one per vertex, in (0, 2*pi).
/// Reflex corners come out greater than pi.
std::vector<double> interior_angles(const std::vector<Vec2>& poly);

/// Winding-number point-in-polygon; points within `boundary_tol` of an edge
/// count as on the boundary, reported separately.
enum class PointLocation { outside, boundary, inside };
PointLocation locate_point(Vec2 p, const std::vector<Vec2>& poly, double boundary_tol);

/// True when open segments (a,b) and (c,d) cross transversally, excluding
/// contacts within `tol` of any endpoint and collinear overlaps.
bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol);

/// Area of the intersection of two convex polygons (Sutherland-Hodgman).
double convex_clip_area(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip);

/// Distance from point to closed segment [a, b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

struct BBox2 {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    void expand(Vec2 p) {
        xmin = std::min(xmin, p.x);
        ymin = std::min(ymin, p.y);
        xmax = std::max(xmax, p.x);
        ymax = std::max(ymax, p.y);
    }
    static BBox2 of(const std::vector<Vec2>& pts);
    bool overlaps(const BBox2& o, double pad) const {
        return xmin - pad <= o.xmax && o.xmin - pad <= xmax && ymin - pad <= o.ymax &&
               o.ymin - pad <= ymax;
    }
};

/// Group values into tolerance classes; returns sorted class representatives.
std::vector<double> value_classes(std::vector<double> values, double tol);

}  // namespace qrpoly
