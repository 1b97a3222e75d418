#include "qrpoly/prism.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace qrpoly {

namespace {

constexpr double kTol = 1e-9;

void collect_edges(Polyhedron& p) {
    std::set<std::array<int, 2>> seen;
    p.edges.clear();
    for (const auto& face : p.faces) {
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i) {
            int a = face[i], b = face[(i + 1) % k];
            if (a > b) std::swap(a, b);
            if (seen.insert({a, b}).second) p.edges.push_back({a, b});
        }
    }
    std::sort(p.edges.begin(), p.edges.end());
}

Vec3 face_centroid(const Polyhedron& p, const std::vector<int>& face) {
    Vec3 c;
    for (int i : face) c = c + p.vertices[static_cast<std::size_t>(i)];
    return (1.0 / static_cast<double>(face.size())) * c;
}

Vec3 newell_normal(const Polyhedron& p, const std::vector<int>& face) {
    Vec3 nrm;
    const std::size_t k = face.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Vec3& a = p.vertices[static_cast<std::size_t>(face[i])];
        const Vec3& b = p.vertices[static_cast<std::size_t>(face[(i + 1) % k])];
        nrm.x += (a.y - b.y) * (a.z + b.z);
        nrm.y += (a.z - b.z) * (a.x + b.x);
        nrm.z += (a.x - b.x) * (a.y + b.y);
    }
    return nrm;
}

// Flip faces so every normal points away from the origin (origin interior).
void orient_outward(Polyhedron& p) {
    for (auto& face : p.faces) {
        if (dot(newell_normal(p, face), face_centroid(p, face)) < 0.0)
            std::reverse(face.begin(), face.end());
    }
}

void check_planarity(const Polyhedron& p) {
    for (const auto& face : p.faces) {
        Vec3 nrm = newell_normal(p, face);
        const double len = norm(nrm);
        if (len <= 0.0) throw std::logic_error("polyhedron: degenerate face");
        nrm = (1.0 / len) * nrm;
        const Vec3 c = face_centroid(p, face);
        for (int i : face) {
            if (std::abs(dot(nrm, p.vertices[static_cast<std::size_t>(i)] - c)) > kTol)
                throw std::logic_error("polyhedron: non-planar face");
        }
    }
}

bool all_faces_squares(const Polyhedron& p);

SolidKind classify_prism_kind(const Polyhedron& p) {
    if (all_faces_squares(p)) return SolidKind::cube;
    if (p.n == 2) return SolidKind::rectangular_box;
    return SolidKind::prism;
}

}  // namespace

std::string to_string(SolidKind k) {
    switch (k) {
        case SolidKind::prism: return "prism";
        case SolidKind::dipyramid: return "dipyramid";
        case SolidKind::cube: return "cube";
        case SolidKind::octahedron: return "octahedron";
        case SolidKind::rectangular_box: return "rectangular-box";
    }
    return "?";
}

Polyhedron build_prism(int n, double a1, double a2, double a3) {
    if (n < 2) throw std::invalid_argument("build_prism: n must be >= 2");
    if (a3 <= 0.0) throw std::invalid_argument("build_prism: a3 must be positive");
    if (a1 < 0.0 || a2 < 0.0) throw std::invalid_argument("build_prism: negative cap parameter");
    if (a1 == 0.0 && a2 == 0.0) throw std::invalid_argument("build_prism: cap parameters both zero");
    if (n == 2 && (a1 == 0.0 || a2 == 0.0))
        throw std::invalid_argument("build_prism: n=2 cap degenerates to a segment");

    const CoxeterSystem sys = CoxeterSystem::build(n, 3);
    const auto members = sys.orbit(sys.weight_vector({a1, a2, a3}));

    Polyhedron p;
    p.n = n;
    p.a1 = a1;
    p.a2 = a2;
    p.a3 = a3;
    p.vertices.reserve(members.size());
    for (const auto& m : members) p.vertices.push_back(m.cartesian.to_vec3());

    // Orbit sort gives the top layer (x3 > 0) first, CCW, then the bottom.
    const std::size_t total = p.vertices.size();
    if (total % 2 != 0) throw std::logic_error("build_prism: odd orbit size");
    const int m = static_cast<int>(total / 2);
    for (int i = 0; i < m; ++i) {
        if (p.vertices[static_cast<std::size_t>(i)].z <= 0.0)
            throw std::logic_error("build_prism: layer split failed");
    }
    // Bottom partner of top[i]: same (x1, x2); the layers sort identically.
    std::vector<int> below(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
        const Vec3 t = p.vertices[static_cast<std::size_t>(i)];
        for (int j = m; j < 2 * m; ++j) {
            const Vec3 b = p.vertices[static_cast<std::size_t>(j)];
            if (std::abs(t.x - b.x) < kTol && std::abs(t.y - b.y) < kTol) {
                below[static_cast<std::size_t>(i)] = j;
                break;
            }
        }
        if (below[static_cast<std::size_t>(i)] < 0)
            throw std::logic_error("build_prism: missing mirror vertex");
    }

    std::vector<int> top(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) top[static_cast<std::size_t>(i)] = i;
    std::vector<int> bottom;
    for (int i = 0; i < m; ++i) bottom.push_back(below[static_cast<std::size_t>(i)]);

    p.faces.push_back(top);
    std::vector<int> bottom_face(bottom.rbegin(), bottom.rend());
    p.faces.push_back(bottom_face);
    for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        p.faces.push_back({top[static_cast<std::size_t>(j)], top[static_cast<std::size_t>(i)],
                           bottom[static_cast<std::size_t>(i)], bottom[static_cast<std::size_t>(j)]});
    }

    orient_outward(p);
    check_planarity(p);
    collect_edges(p);
    p.kind = classify_prism_kind(p);
    return p;
}

namespace {

struct FacePlane {
    Vec3 unit_normal;
    double distance;
};

FacePlane face_plane(const Polyhedron& p, const std::vector<int>& face) {
    Vec3 nrm = newell_normal(p, face);
    const double len = norm(nrm);
    if (len <= 0.0) throw std::logic_error("face_plane: degenerate face");
    nrm = (1.0 / len) * nrm;
    const double d = dot(nrm, face_centroid(p, face));
    if (d <= kTol) throw std::logic_error("face_plane: origin not interior");
    return {nrm, d};
}

bool is_octahedron(const Polyhedron& p) {
    if (p.vertices.size() != 6 || p.faces.size() != 8) return false;
    std::vector<double> lengths;
    for (const auto& e : p.edges)
        lengths.push_back(dist(p.vertices[static_cast<std::size_t>(e[0])],
                               p.vertices[static_cast<std::size_t>(e[1])]));
    return value_classes(lengths, kTol).size() == 1;
}

}  // namespace

Polyhedron polar_dual(const Polyhedron& p, double r2) {
    if (r2 <= 0.0) throw std::invalid_argument("polar_dual: r2 must be positive");
    Polyhedron d;
    d.n = p.n;
    d.a1 = p.a1;
    d.a2 = p.a2;
    d.a3 = p.a3;
    d.scale_r2 = r2;

    d.vertices.reserve(p.faces.size());
    for (const auto& face : p.faces) {
        const FacePlane pl = face_plane(p, face);
        d.vertices.push_back((r2 / pl.distance) * pl.unit_normal);
    }

    // Map each directed edge (a -> b) to the face listing it.
    std::map<std::pair<int, int>, int> face_of;
    for (std::size_t f = 0; f < p.faces.size(); ++f) {
        const auto& face = p.faces[f];
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i)
            face_of[{face[i], face[(i + 1) % k]}] = static_cast<int>(f);
    }

    // Dual face of vertex v: walk the fan of incident faces.
    for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v) {
        int start = -1;
        for (std::size_t f = 0; f < p.faces.size() && start < 0; ++f) {
            for (int idx : p.faces[f])
                if (idx == v) {
                    start = static_cast<int>(f);
                    break;
                }
        }
        if (start < 0) throw std::logic_error("polar_dual: isolated vertex");
        std::vector<int> cycle;
        int f = start;
        do {
            cycle.push_back(f);
            const auto& face = p.faces[static_cast<std::size_t>(f)];
            const std::size_t k = face.size();
            int succ = -1;
            for (std::size_t i = 0; i < k; ++i) {
                if (face[i] == v) {
                    succ = face[(i + 1) % k];
                    break;
                }
            }
            const auto it = face_of.find({succ, v});
            if (it == face_of.end()) throw std::logic_error("polar_dual: open edge fan");
            f = it->second;
        } while (f != start);
        d.faces.push_back(std::move(cycle));
    }

    orient_outward(d);
    check_planarity(d);
    collect_edges(d);
    d.kind = is_octahedron(d) ? SolidKind::octahedron : SolidKind::dipyramid;
    return d;
}

Polyhedron dual_prism(int n, double a1, double a2, double a3) {
    const Polyhedron prism = build_prism(n, a1, a2, a3);

    // Sphere radius pinning the equatorial ring to the 2D dual normalization.
    const CoxeterSystem sys = CoxeterSystem::build(n, 2);
    const double g = sys.cartan_inv(0, 0);
    const double c = 2.0 * std::cos(kPi / n);
    double r2;
    if (a1 > 0.0 && a2 > 0.0) {
        r2 = 0.5 * g * a1 * (2.0 * a1 + c * a2);
    } else if (a2 == 0.0) {
        r2 = 0.5 * g * c * a1 * a1;
    } else {
        r2 = 0.5 * g * c * a2 * a2;
    }

    Polyhedron d = polar_dual(prism, r2);
    d.kind = is_octahedron(d) ? SolidKind::octahedron : SolidKind::dipyramid;
    return d;
}

namespace {

std::string classify_one(const std::vector<double>& lens, const std::vector<double>& angs) {
    const std::size_t k = lens.size();
    const std::vector<double> lclasses = value_classes(lens, kTol);
    const std::vector<double> aclasses = value_classes(angs, kTol);
    if (k == 3) {
        if (lclasses.size() == 1) return "equilateral";
        if (lclasses.size() == 2) return "isosceles";
        return "scalene";
    }
    const bool right_angles =
        aclasses.size() == 1 && std::abs(aclasses[0] - kPi / 2.0) < 1e-7;
    if (k == 4 && right_angles) return lclasses.size() == 1 ? "square" : "rectangle";
    const std::string kgon = std::to_string(k) + "-gon";
    if (lclasses.size() == 1 && aclasses.size() == 1) return "regular-" + kgon;
    if (aclasses.size() == 1 && lclasses.size() == 2) return "isogonal-" + kgon;
    if (lclasses.size() == 1 && aclasses.size() == 2) return "isotoxal-" + kgon;
    return "irregular-" + kgon;
}

bool all_faces_squares(const Polyhedron& p) {
    for (const auto& face : p.faces) {
        if (face.size() != 4) return false;
    }
    for (const FaceReport& r : classify_faces(p)) {
        if (r.shape != "square") return false;
    }
    return true;
}

}  // namespace

std::vector<FaceReport> classify_faces(const Polyhedron& p) {
    std::vector<FaceReport> out;
    for (std::size_t f = 0; f < p.faces.size(); ++f) {
        const auto& face = p.faces[f];
        const std::size_t k = face.size();
        FaceReport rep;
        rep.face = static_cast<int>(f);
        std::vector<double> angs;
        for (std::size_t i = 0; i < k; ++i) {
            const Vec3& prev = p.vertices[static_cast<std::size_t>(face[(i + k - 1) % k])];
            const Vec3& cur = p.vertices[static_cast<std::size_t>(face[i])];
            const Vec3& next = p.vertices[static_cast<std::size_t>(face[(i + 1) % k])];
            rep.edge_lengths.push_back(dist(cur, next));
            const Vec3 u = prev - cur;
            const Vec3 v = next - cur;
            angs.push_back(std::acos(std::clamp(dot(u, v) / (norm(u) * norm(v)), -1.0, 1.0)));
        }
        rep.shape = classify_one(rep.edge_lengths, angs);
        out.push_back(std::move(rep));
    }
    return out;
}

int euler_characteristic(const Polyhedron& p) {
    return static_cast<int>(p.vertices.size()) - static_cast<int>(p.edges.size()) +
           static_cast<int>(p.faces.size());
}

std::vector<double> edge_length_classes(const Polyhedron& p) {
    std::vector<double> lens;
    for (const auto& e : p.edges)
        lens.push_back(dist(p.vertices[static_cast<std::size_t>(e[0])],
                            p.vertices[static_cast<std::size_t>(e[1])]));
    return value_classes(lens, kTol);
}

}  // namespace qrpoly
