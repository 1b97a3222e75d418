#pragma once

#include <string>
#include <vector>

#include "qrpoly/coxeter.hpp"
#include "qrpoly/geometry.hpp"

namespace qrpoly {

enum class PolygonKind { regular, isogonal, isotoxal };

std::string to_string(PolygonKind k);

/// A quasi-regular polygon realized as a CCW vertex cycle. `n` is the
/// dihedral parameter: 2n vertices in general, n for fundamental orbits.
/// Edge-scale parameters follow the paper convention: edges measure
/// sqrt(2) * a_i. `lambda` is the dual scale (isotoxal polygons only).
struct Polygon {
    PolygonKind kind = PolygonKind::regular;
    int n = 0;
    double a1 = 0.0;
    double a2 = 0.0;
    double lambda = 0.0;
    std::vector<Vec2> vertices;
};

Polygon regular_polygon(int n, double a);

/// Orbit of a1*omega1 + a2*omega2: alternating edges sqrt(2)a1 / sqrt(2)a2,
/// all interior angles pi(1 - 1/n). A zero parameter degenerates to the
/// fundamental n-gon orbit (reported as regular).
Polygon isogonal_polygon(int n, double a1, double a2);

/// Scale lambda with (lambda*omega2 - a1*omega1) orthogonal to
/// a1*omega1 + a2*omega2; closed form a1(2a1 + c a2)/(c a1 + 2 a2) with
/// c = 2 cos(pi/n).
double dual_scale(int n, double a1, double a2);

/// Dual of the isogonal polygon: the 2n vertices interleave the orbits
/// O(a1, 0) and lambda * O(0, 1). All edges equal; interior angles alternate
/// between two values summing to 2 pi (n-1)/n.
Polygon isotoxal_polygon(int n, double a1, double a2);

struct PolygonMetrics {
    std::vector<double> edge_lengths;      // per edge, cyclic
    std::vector<double> interior_angles;   // per vertex, radians
    std::vector<double> circumradii;       // per vertex
    std::vector<double> edge_classes;      // tolerance classes, ascending
    std::vector<double> angle_classes;     // tolerance classes, ascending
};

PolygonMetrics polygon_metrics(const Polygon& p);

/// Orbit counts of the polygon's vertex and edge sets under its dihedral
/// symmetry group (the D_n generated by the system plus the diagram symmetry
/// when it preserves the vertex set).
struct TransitivityReport {
    bool vertex_transitive = false;
    bool edge_transitive = false;
    int vertex_orbits = 0;
    int edge_orbits = 0;
    int symmetry_order = 0;
};

TransitivityReport transitivity_report(const Polygon& p, const CoxeterSystem& sys);

}  // namespace qrpoly
