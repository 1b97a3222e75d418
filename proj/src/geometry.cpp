#include "qrpoly/geometry.hpp"

#include <algorithm>
#include <limits>

namespace qrpoly {

double signed_area(const std::vector<Vec2>& poly) {
    double a = 0.0;
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % k];
        a += cross(p, q);
    }
    return 0.5 * a;
}

std::vector<double> interior_angles(const std::vector<Vec2>& poly) {
    const std::size_t k = poly.size();
    std::vector<double> angles(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Vec2 prev = poly[(i + k - 1) % k];
        const Vec2 cur = poly[i];
        const Vec2 next = poly[(i + 1) % k];
        const Vec2 in = cur - prev;
        const Vec2 out = next - cur;
        // Signed exterior turn; interior = pi - turn, reflex handled by sign.
        const double turn = std::atan2(cross(in, out), dot(in, out));
        double interior = kPi - turn;
        if (interior <= 0.0) interior += 2.0 * kPi;
        if (interior >= 2.0 * kPi) interior -= 2.0 * kPi;
        angles[i] = interior;
    }
    return angles;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + t * ab);
}

PointLocation locate_point(Vec2 p, const std::vector<Vec2>& poly, double boundary_tol) {
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (point_segment_distance(p, poly[i], poly[(i + 1) % k]) <= boundary_tol)
            return PointLocation::boundary;
    }
    // Winding number; robust enough once boundary points are excluded.
    double winding = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const Vec2 a = poly[i] - p;
        const Vec2 b = poly[(i + 1) % k] - p;
        winding += std::atan2(cross(a, b), dot(a, b));
    }
    return std::abs(winding) > kPi ? PointLocation::inside : PointLocation::outside;
}

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol) {
    const Vec2 r = b - a;
    const Vec2 s = d - c;
    const double denom = cross(r, s);
    const double scale = std::max({norm(r), norm(s), 1e-30});
    if (std::abs(denom) < tol * scale * scale) return false;  // parallel or collinear
    const Vec2 qp = c - a;
    const double t = cross(qp, s) / denom;
    const double u = cross(qp, r) / denom;
    const double et = tol / std::max(norm(r), 1e-30);
    const double eu = tol / std::max(norm(s), 1e-30);
    return t > et && t < 1.0 - et && u > eu && u < 1.0 - eu;
}

double convex_clip_area(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip) {
    std::vector<Vec2> out = subject;
    const std::size_t k = clip.size();
    for (std::size_t i = 0; i < k && !out.empty(); ++i) {
        const Vec2 a = clip[i];
        const Vec2 b = clip[(i + 1) % k];
        const Vec2 e = b - a;
        std::vector<Vec2> in;
        in.swap(out);
        const std::size_t m = in.size();
        for (std::size_t j = 0; j < m; ++j) {
            const Vec2 p = in[j];
            const Vec2 q = in[(j + 1) % m];
            const double sp = cross(e, p - a);
            const double sq = cross(e, q - a);
            if (sp >= 0.0) out.push_back(p);
            if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
                const double t = sp / (sp - sq);
                out.push_back(p + t * (q - p));
            }
        }
    }
    if (out.size() < 3) return 0.0;
    return std::abs(signed_area(out));
}

BBox2 BBox2::of(const std::vector<Vec2>& pts) {
    BBox2 b;
    if (pts.empty()) return b;
    b.xmin = b.xmax = pts[0].x;
    b.ymin = b.ymax = pts[0].y;
    for (const Vec2& p : pts) b.expand(p);
    return b;
}

std::vector<double> value_classes(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end());
    std::vector<double> classes;
    for (double v : values) {
        if (classes.empty() || v - classes.back() > tol) classes.push_back(v);
    }
    return classes;
}

}  // namespace qrpoly
