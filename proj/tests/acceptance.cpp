// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Target runtime well under a minute.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qrpoly/emit.hpp"
#include "qrpoly/quat.hpp"

using namespace qrpoly;

namespace {

int g_failures = 0;

void report(int id, const std::string& label, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// 1. Automorphism group orders, each under five seconds.
void criterion_group_orders() {
    const auto t0 = std::chrono::steady_clock::now();
    const long o3 = aut_group_order(3);
    const auto t1 = std::chrono::steady_clock::now();
    const long o5 = aut_group_order(5);
    const auto t2 = std::chrono::steady_clock::now();
    const double s3 = std::chrono::duration<double>(t1 - t0).count();
    const double s5 = std::chrono::duration<double>(t2 - t1).count();
    const bool ok = o3 == 144 && o5 == 400 && s3 < 5.0 && s5 < 5.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "order(3)=%ld in %.2fs, order(5)=%ld in %.2fs", o3, s3,
                  o5, s5);
    report(1, "aut group orders 144 and 400", ok, detail);
}

// 2. Generator relations on random vectors for n in 2..12.
void criterion_generator_relations() {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double worst = 0.0;
    for (int n = 2; n <= 12; ++n) {
        const auto sys = CoxeterSystem::build(n, 2);
        for (int t = 0; t < 100; ++t) {
            const auto v = sys.weight_vector({dist(rng), dist(rng)});
            for (int i = 1; i <= 2; ++i) {
                const auto sq = sys.reflect(i, sys.reflect(i, v));
                worst = std::max(worst, std::abs(sq.coeffs[0] - v.coeffs[0]));
                worst = std::max(worst, std::abs(sq.coeffs[1] - v.coeffs[1]));
            }
            auto w = v;
            for (int k = 0; k < n; ++k) w = sys.reflect(1, sys.reflect(2, w));
            worst = std::max(worst, std::abs(w.coeffs[0] - v.coeffs[0]));
            worst = std::max(worst, std::abs(w.coeffs[1] - v.coeffs[1]));
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max residual %.2e", worst);
    report(2, "r1^2 = r2^2 = (r1 r2)^n = 1", worst < 1e-10, detail);
}

// 3. Linear reflection vs quaternion sandwich on 1000 random inputs.
void criterion_reflection_agreement() {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const auto sys = CoxeterSystem::build(n, 2);
        const auto v = sys.weight_vector({dist(rng), dist(rng)});
        for (int i = 1; i <= 2; ++i) {
            const auto lin = sys.reflect(i, v);
            const Quat unit = (1.0 / std::sqrt(2.0)) * sys.simple_roots()[i - 1];
            const Quat sand = -(unit * v.cartesian.conj() * unit);
            worst = std::max(worst, (lin.cartesian - sand).norm());
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max deviation %.2e", worst);
    report(3, "linear and quaternion reflections agree", worst < 1e-10, detail);
}

// 4. Isogonal hexagon (1,2) edges and angles.
void criterion_isogonal_hexagon() {
    const Polygon p = isogonal_polygon(3, 1, 2);
    const PolygonMetrics m = polygon_metrics(p);
    bool ok = p.vertices.size() == 6 && m.edge_classes.size() == 2;
    if (ok) {
        ok = close(m.edge_classes[0], std::sqrt(2.0), 1e-9) &&
             close(m.edge_classes[1], 2.0 * std::sqrt(2.0), 1e-9);
        for (std::size_t i = 0; i + 1 < 6; ++i) {
            const bool low = std::abs(m.edge_lengths[i] - std::sqrt(2.0)) < 1e-9;
            const bool next_low = std::abs(m.edge_lengths[i + 1] - std::sqrt(2.0)) < 1e-9;
            if (low == next_low) ok = false;  // must alternate
        }
        for (double a : m.interior_angles)
            if (!close(a, 2.0 * kPi / 3.0, 1e-9)) ok = false;
    }
    report(4, "isogonal hexagon (1,2) edges alternate sqrt2/2sqrt2 at 120 deg", ok);
}

// 5. Dual scale closed form and printed special cases.
void criterion_dual_scale() {
    bool ok = std::abs(dual_scale(3, 1, 2) - 0.8) < 1e-12;
    const double rt2 = std::sqrt(2.0);
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    std::mt19937 rng(107);
    std::uniform_real_distribution<double> dist(0.1, 3.0);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        const double a1 = dist(rng), a2 = dist(rng);
        worst = std::max(worst, std::abs(dual_scale(4, a1, a2) -
                                         a1 * (rt2 * a1 + a2) / (a1 + rt2 * a2)));
        worst = std::max(worst, std::abs(dual_scale(5, a1, a2) -
                                         a1 * (2 * a1 + tau * a2) / (tau * a1 + 2 * a2)));
        // Orthogonality residual of the defining relation.
        for (int n : {2, 3, 4, 5, 7, 9}) {
            const auto sys = CoxeterSystem::build(n, 2);
            const Quat leg =
                dual_scale(n, a1, a2) * sys.weights()[1] - a1 * sys.weights()[0];
            const Quat lam = a1 * sys.weights()[0] + a2 * sys.weights()[1];
            worst = std::max(worst, std::abs(scalar_product(leg, lam)));
        }
    }
    ok = ok && worst < 1e-10;
    char detail[64];
    std::snprintf(detail, sizeof(detail), "worst residual %.2e", worst);
    report(5, "dual scale: lambda(3,1,2)=0.8, printed n=4/n=5 forms", ok, detail);
}

// 6. Isotoxal angle sums and the printed eta = 0.8 angles.
void criterion_isotoxal_angles() {
    std::mt19937 rng(109);
    std::uniform_real_distribution<double> dist(0.1, 3.0);
    bool ok = true;
    for (int n : {3, 4, 5}) {
        const double target = 2.0 * kPi * (n - 1) / n;
        for (int t = 0; t < 100; ++t) {
            const Polygon p = isotoxal_polygon(n, dist(rng), dist(rng));
            const PolygonMetrics m = polygon_metrics(p);
            for (std::size_t i = 0; i < m.interior_angles.size(); ++i) {
                const double sum = m.interior_angles[i] +
                                   m.interior_angles[(i + 1) % m.interior_angles.size()];
                if (!close(sum, target, 1e-9)) ok = false;
            }
        }
    }
    const PolygonMetrics m = polygon_metrics(isotoxal_polygon(3, 1, 2));
    const double alpha = m.angle_classes[1] * 180.0 / kPi;
    const double beta = m.angle_classes[0] * 180.0 / kPi;
    ok = ok && close(alpha, 141.787, 1e-3) && close(beta, 98.213, 1e-3);
    char detail[64];
    std::snprintf(detail, sizeof(detail), "alpha %.4f beta %.4f", alpha, beta);
    report(6, "alpha+beta = 240/270/288 deg; eta=0.8 angles", ok, detail);
}

// 7. Printed dual prisms.
void criterion_prism_duals() {
    bool ok = true;
    {
        const auto classes = edge_length_classes(dual_prism(3, 1, 0, 1));
        ok = ok && classes.size() == 2 && close(classes[0], std::sqrt(8.0 / 9.0), 1e-9) &&
             close(classes[1], std::sqrt(2.0), 1e-9);
    }
    {
        const auto classes = edge_length_classes(dual_prism(3, 1, 1, 1));
        ok = ok && classes.size() == 2 && close(classes[0], std::sqrt(2.0 / 3.0), 1e-9) &&
             close(classes[1], std::sqrt(8.0 / 3.0), 1e-9);
    }
    {
        const Polyhedron d = dual_prism(4, 1, 0, 1);
        ok = ok && d.kind == SolidKind::octahedron;
        const CoxeterSystem sys = CoxeterSystem::build(4, 3);
        const double rt2 = std::sqrt(2.0);
        const std::vector<std::vector<double>> table = {{0, 1, 0},    {0, -1, 0},
                                                        {rt2, -1, 0}, {-rt2, 1, 0},
                                                        {0, 0, rt2},  {0, 0, -rt2}};
        for (const auto& coeffs : table) {
            const Vec3 want = sys.weight_vector(coeffs).cartesian.to_vec3();
            bool hit = false;
            for (const Vec3& v : d.vertices)
                if (dist(v, want) < 1e-9) hit = true;
            ok = ok && hit;
        }
    }
    report(7, "dual prisms: sqrt(8/9)/sqrt2, sqrt(8/3)/sqrt(2/3), cube->octahedron", ok);
}

// 8. Euler characteristic across n and parameter classes.
void criterion_euler() {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        std::vector<std::array<double, 3>> params = {{1.0, 2.0, 1.5}, {1.0, 1.0, 1.0}};
        if (n > 2) {
            params.push_back({0.0, 1.0, 0.7});
            params.push_back({1.0, 0.0, 0.7});
        }
        for (const auto& a : params) {
            ok = ok && euler_characteristic(build_prism(n, a[0], a[1], a[2])) == 2;
            ok = ok && euler_characteristic(dual_prism(n, a[0], a[1], a[2])) == 2;
        }
    }
    report(8, "V - E + F = 2 for every prism and dipyramid, n in 2..8", ok);
}

// 9. Pentagonal prisms coincide after a 36 degree turn.
void criterion_pentagonal_rotation() {
    const Polyhedron a = build_prism(5, 1, 0, 1);
    const Polyhedron b = build_prism(5, 0, 1, 1);
    bool ok = a.vertices.size() == b.vertices.size();
    double worst = 0.0;
    for (const Vec3& v : a.vertices) {
        const Vec2 xy = rotate({v.x, v.y}, kPi / 5.0);
        const Vec3 turned{xy.x, xy.y, v.z};
        double best = 1e30;
        for (const Vec3& w : b.vertices) best = std::min(best, dist(turned, w));
        worst = std::max(worst, best);
    }
    ok = ok && worst < 1e-9;
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max vertex mismatch %.2e", worst);
    report(9, "pentagonal prisms agree after 36 degree rotation", ok, detail);
}

// 10. Patch validation over the parameter grid, plus the honeycomb census.
void criterion_patch_grid() {
    bool ok = true;
    std::string first_failure;
    const double grid[3] = {0.5, 1.0, 2.0};
    for (double a1 : grid) {
        for (double a2 : grid) {
            for (int rings = 1; rings <= 3; ++rings) {
                std::vector<std::pair<std::string, std::function<Patch()>>> jobs;
                jobs.emplace_back("hexagon", [=] { return hexagon_patch(a1, a2, rings); });
                jobs.emplace_back("isotoxal-hexagon",
                                  [=] { return isotoxal_hexagon_patch(a1, a2, rings); });
                jobs.emplace_back("octagon-isogonal", [=] {
                    return octagon_square_patch(a1, a2, rings, OctagonVariant::isogonal);
                });
                jobs.emplace_back("octagon-isotoxal", [=] {
                    return octagon_square_patch(a1, a2, rings, OctagonVariant::isotoxal);
                });
                if (a1 == a2)
                    jobs.emplace_back("octagon-regular", [=] {
                        return octagon_square_patch(a1, a2, rings, OctagonVariant::regular);
                    });
                for (const auto& [name, job] : jobs) {
                    const PatchValidation v = validate_patch(job());
                    if (!(v.pass() && v.max_overlap_ratio <= 1e-8 &&
                          v.max_angle_residual <= 1e-8)) {
                        ok = false;
                        if (first_failure.empty())
                            first_failure = name + " a1=" + std::to_string(a1) +
                                            " a2=" + std::to_string(a2) +
                                            " rings=" + std::to_string(rings);
                    }
                }
            }
        }
    }
    const PatchValidation honey = validate_patch(hexagon_patch(1, 1, 3));
    ok = ok && honey.vertex_census.size() == 1 &&
         honey.vertex_census.begin()->first ==
             "regular-hexagon:120+regular-hexagon:120+regular-hexagon:120";
    report(10, "tilings validate over {0.5,1,2}^2 x rings {1,2,3}; honeycomb census", ok,
           first_failure);
}

// 11. Graphene bond audit on hexagon_patch(1,2,3).
void criterion_graphene() {
    const Patch p = hexagon_patch(1, 2, 3);
    const GrapheneGraph g = graphene_graph(p, DoubleBond::shorter);
    std::vector<int> degree(g.atoms.size(), 0);
    std::vector<int> doubles(g.atoms.size(), 0);
    for (const auto& b : g.bonds) {
        ++degree[b.a];
        ++degree[b.b];
        if (b.dbl) {
            ++doubles[b.a];
            ++doubles[b.b];
        }
    }
    bool ok = true;
    int interior = 0;
    for (std::size_t i = 0; i < g.atoms.size(); ++i) {
        if (degree[i] > 3) ok = false;
        if (g.interior[i]) {
            ++interior;
            if (degree[i] != 3 || doubles[i] != 1) ok = false;
        }
    }
    ok = ok && interior > 0;
    char detail[64];
    std::snprintf(detail, sizeof(detail), "%d interior atoms audited", interior);
    report(11, "graphene: interior atoms have 3 bonds, exactly 1 double", ok, detail);
}

// 12. Transitivity by orbit counting for n in 2..8.
void criterion_transitivity() {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        const CoxeterSystem sys = CoxeterSystem::build(n, 2);
        const auto iso = transitivity_report(isogonal_polygon(n, 1, 2), sys);
        const auto dual = transitivity_report(isotoxal_polygon(n, 1, 2), sys);
        const auto reg = transitivity_report(regular_polygon(n, 1), sys);
        ok = ok && iso.vertex_transitive && iso.edge_orbits == 2;
        ok = ok && dual.edge_transitive && dual.vertex_orbits == 2;
        ok = ok && reg.vertex_transitive && reg.edge_transitive;
    }
    report(12, "isogonal vertex-transitive (2 edge orbits); isotoxal dual; regular both", ok);
}

// 13. Pentagonal dual: computed equatorial edge sqrt(2); full report emitted.
void criterion_pentagonal_dual_record() {
    const Polyhedron d = dual_prism(5, 1, 0, 1);
    const auto classes = edge_length_classes(d);
    bool ok = classes.size() == 2 && close(classes[0], std::sqrt(2.0), 1e-9);
    std::string detail = "edge classes:";
    for (double c : classes) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), " %.9f", c);
        detail += buf;
    }
    report(13, "pentagonal dual equatorial edge sqrt(2); edge report recorded", ok, detail);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_group_orders();
    criterion_generator_relations();
    criterion_reflection_agreement();
    criterion_isogonal_hexagon();
    criterion_dual_scale();
    criterion_isotoxal_angles();
    criterion_prism_duals();
    criterion_euler();
    criterion_pentagonal_rotation();
    criterion_patch_grid();
    criterion_graphene();
    criterion_transitivity();
    criterion_pentagonal_dual_record();
    const double elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();
    std::printf("%s: 13 criteria, %d failure(s), %.1fs\n", g_failures == 0 ? "OK" : "FAILED",
                g_failures, elapsed);
    return g_failures == 0 ? 0 : 1;
}
