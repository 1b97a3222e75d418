#pragma once

#include <array>
#include <string>
#include <vector>

#include "qrpoly/coxeter.hpp"
#include "qrpoly/geometry.hpp"

namespace qrpoly {

enum class SolidKind { prism, dipyramid, cube, octahedron, rectangular_box };

std::string to_string(SolidKind k);

/// Convex solid with CCW-outward faces. Coordinates follow the quaternion
/// embedding: (x1, x2, x3) = (w, e1, e2) components.
struct Polyhedron {
    SolidKind kind = SolidKind::prism;
    int n = 0;
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
    double scale_r2 = 0.0;  // reciprocation sphere radius^2 (duals only)
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> faces;
};

/// Orbit of a1 w1 + a2 w2 + a3 w3 under D_n x C_2: two parallel isogonal
/// 2n-gon caps at x3 = +/- a3/sqrt(2) (n-gon caps when a1 or a2 vanishes)
/// joined by lateral rectangles.
Polyhedron build_prism(int n, double a1, double a2, double a3);

/// Polar reciprocal of the prism about an origin-centered sphere, radius
/// normalized so the equatorial dual ring reproduces the 2D dual polygon
/// (a1 * O(10) class kept at scale a1, partner class at the dual scale).
Polyhedron dual_prism(int n, double a1, double a2, double a3);

/// Generic polar reciprocation about radius^2 = r2; faces map to vertices
/// r2 * normal / distance, vertices map to the cycle of their incident
/// faces' duals. Requires a convex solid with the origin interior.
Polyhedron polar_dual(const Polyhedron& p, double r2);

struct FaceReport {
    int face = 0;
    std::string shape;  // square, rectangle, equilateral, isosceles, scalene,
                        // isogonal-<k>-gon, isotoxal-<k>-gon, regular-<k>-gon
    std::vector<double> edge_lengths;
};

std::vector<FaceReport> classify_faces(const Polyhedron& p);

/// V - E + F.
int euler_characteristic(const Polyhedron& p);

/// Edge-length tolerance classes over the whole solid, ascending.
std::vector<double> edge_length_classes(const Polyhedron& p);

}  // namespace qrpoly
