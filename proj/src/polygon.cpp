#include "qrpoly/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qrpoly {

namespace {

constexpr double kTol = 1e-9;

std::vector<Vec2> orbit_points(const CoxeterSystem& sys, double a1, double a2) {
    const auto members = sys.orbit(sys.weight_vector({a1, a2}));
    std::vector<Vec2> pts;
    pts.reserve(members.size());
    for (const auto& m : members) pts.push_back(m.cartesian.to_vec2());
    return pts;
}

void check_simple_ccw(const Polygon& p) {
    if (p.vertices.size() < 3) throw std::logic_error("polygon: fewer than 3 vertices");
    if (signed_area(p.vertices) <= 0.0) throw std::logic_error("polygon: not CCW");
}

}  // namespace

std::string to_string(PolygonKind k) {
    switch (k) {
        case PolygonKind::regular: return "regular";
        case PolygonKind::isogonal: return "isogonal";
        case PolygonKind::isotoxal: return "isotoxal";
    }
    return "?";
}

Polygon regular_polygon(int n, double a) {
    if (a <= 0.0) throw std::invalid_argument("regular_polygon: a must be positive");
    const CoxeterSystem sys = CoxeterSystem::build(n, 2);
    Polygon p;
    p.kind = PolygonKind::regular;
    p.n = n;
    p.a1 = p.a2 = a;
    p.vertices = orbit_points(sys, a, a);
    check_simple_ccw(p);
    return p;
}

Polygon isogonal_polygon(int n, double a1, double a2) {
    if (a1 < 0.0 || a2 < 0.0) throw std::invalid_argument("isogonal_polygon: negative parameter");
    if (a1 == 0.0 && a2 == 0.0) throw std::invalid_argument("isogonal_polygon: both parameters zero");
    if (n == 2 && (a1 == 0.0 || a2 == 0.0))
        throw std::invalid_argument("isogonal_polygon: fundamental orbit of I2(2) is a segment");
    const CoxeterSystem sys = CoxeterSystem::build(n, 2);
    Polygon p;
    p.kind = (a1 == a2 || a1 == 0.0 || a2 == 0.0) ? PolygonKind::regular : PolygonKind::isogonal;
    p.n = n;
    p.a1 = a1;
    p.a2 = a2;
    p.vertices = orbit_points(sys, a1, a2);
    check_simple_ccw(p);
    return p;
}

double dual_scale(int n, double a1, double a2) {
    if (n < 2) throw std::invalid_argument("dual_scale: n must be >= 2");
    if (a1 <= 0.0 || a2 <= 0.0) throw std::invalid_argument("dual_scale: parameters must be positive");
    const double c = 2.0 * std::cos(kPi / n);
    const double denom = c * a1 + 2.0 * a2;
    if (denom <= 0.0) throw std::logic_error("dual_scale: degenerate denominator");
    const double lambda = a1 * (2.0 * a1 + c * a2) / denom;

    // Orthogonality of Eq-defining relation, in the weight Gram form.
    const CoxeterSystem sys = CoxeterSystem::build(n, 2);
    const double g = sys.cartan_inv(0, 0);
    const double h = sys.cartan_inv(0, 1);
    const double residual = lambda * (a1 * h + a2 * g) - a1 * (a1 * g + a2 * h);
    if (std::abs(residual) > 1e-10 * std::max(1.0, a1 * a1 + a2 * a2))
        throw std::logic_error("dual_scale: orthogonality residual too large");
    return lambda;
}

Polygon isotoxal_polygon(int n, double a1, double a2) {
    if (a1 <= 0.0 || a2 <= 0.0)
        throw std::invalid_argument("isotoxal_polygon: parameters must be positive");
    const CoxeterSystem sys = CoxeterSystem::build(n, 2);
    const double lambda = dual_scale(n, a1, a2);

    std::vector<Vec2> ring = orbit_points(sys, a1, 0.0);
    const std::vector<Vec2> dualring = orbit_points(sys, 0.0, lambda);
    ring.insert(ring.end(), dualring.begin(), dualring.end());
    std::sort(ring.begin(), ring.end(),
              [](Vec2 a, Vec2 b) { return polar_angle(a) < polar_angle(b); });

    Polygon p;
    p.kind = (a1 == a2) ? PolygonKind::regular : PolygonKind::isotoxal;
    p.n = n;
    p.a1 = a1;
    p.a2 = a2;
    p.lambda = lambda;
    p.vertices = std::move(ring);
    check_simple_ccw(p);

    const PolygonMetrics m = polygon_metrics(p);
    if (m.edge_classes.size() != 1)
        throw std::logic_error("isotoxal_polygon: edges failed to come out equal");
    return p;
}

PolygonMetrics polygon_metrics(const Polygon& p) {
    if (p.vertices.size() < 3) throw std::invalid_argument("polygon_metrics: fewer than 3 vertices");
    PolygonMetrics m;
    const std::size_t k = p.vertices.size();
    m.edge_lengths.reserve(k);
    m.circumradii.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        m.edge_lengths.push_back(dist(p.vertices[i], p.vertices[(i + 1) % k]));
        m.circumradii.push_back(norm(p.vertices[i]));
    }
    m.interior_angles = interior_angles(p.vertices);
    m.edge_classes = value_classes(m.edge_lengths, kTol);
    m.angle_classes = value_classes(m.interior_angles, kTol);
    return m;
}

namespace {

// Candidate symmetries: the D_n of the system plus the diagram reflection
// composed with each, kept when they map the vertex set onto itself.
struct LinearMap {
    double a, b, c, d;  // row-major 2x2
    Vec2 apply(Vec2 p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
};

int find_vertex(const std::vector<Vec2>& verts, Vec2 p) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (dist(verts[i], p) < 1e-9 * std::max(1.0, norm(p))) return static_cast<int>(i);
    }
    return -1;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(int i, int j) { parent[find(i)] = find(j); }
    int count() {
        int c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
};

}  // namespace

TransitivityReport transitivity_report(const Polygon& p, const CoxeterSystem& sys) {
    const int n = sys.n();
    std::vector<LinearMap> candidates;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * kPi * k / n;
        const double ct = std::cos(t), st = std::sin(t);
        candidates.push_back({ct, -st, st, ct});
        // Reflections of D_n: rotation composed with the r1 mirror (x -> -x).
        candidates.push_back({-ct, -st, -st, ct});
    }
    // Diagram symmetry extension D_n : C_2.
    const std::size_t base = candidates.size();
    for (std::size_t i = 0; i < base; ++i) {
        const LinearMap& m = candidates[i];
        const Vec2 c1 = sys.gamma_reflect({m.a, m.c});
        const Vec2 c2 = sys.gamma_reflect({m.b, m.d});
        candidates.push_back({c1.x, c2.x, c1.y, c2.y});
    }

    const std::vector<Vec2>& verts = p.vertices;
    const int vcount = static_cast<int>(verts.size());
    std::vector<std::vector<int>> perms;
    for (const LinearMap& m : candidates) {
        std::vector<int> perm(verts.size());
        bool ok = true;
        for (int i = 0; i < vcount && ok; ++i) {
            const int j = find_vertex(verts, m.apply(verts[static_cast<std::size_t>(i)]));
            if (j < 0) ok = false;
            perm[static_cast<std::size_t>(i)] = j;
        }
        if (ok) perms.push_back(std::move(perm));
    }

    DisjointSet vorbits(vcount);
    DisjointSet eorbits(vcount);  // edge i joins vertex i to i+1
    for (const auto& perm : perms) {
        for (int i = 0; i < vcount; ++i) {
            vorbits.unite(i, perm[static_cast<std::size_t>(i)]);
            // Image of edge {i, i+1}: the edge between the two image vertices.
            const int ia = perm[static_cast<std::size_t>(i)];
            const int ib = perm[static_cast<std::size_t>((i + 1) % vcount)];
            int e;
            if ((ia + 1) % vcount == ib) e = ia;
            else if ((ib + 1) % vcount == ia) e = ib;
            else throw std::logic_error("transitivity_report: symmetry broke edge adjacency");
            eorbits.unite(i, e);
        }
    }

    TransitivityReport r;
    r.symmetry_order = static_cast<int>(perms.size());
    r.vertex_orbits = vorbits.count();
    r.edge_orbits = eorbits.count();
    r.vertex_transitive = r.vertex_orbits == 1;
    r.edge_transitive = r.edge_orbits == 1;
    return r;
}

}  // namespace qrpoly
