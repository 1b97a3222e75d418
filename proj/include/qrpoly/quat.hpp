#pragma once

#include <array>
#include <vector>

#include "qrpoly/geometry.hpp"

namespace qrpoly {

/// Real quaternion q = w + x e1 + y e2 + z e3 with e_i e_j = -delta_ij + eps_ijk e_k.
/// Doubles as a point carrier: 2D points live in the (w, e1) plane, 3D points
/// in (w, e1, e2).
struct Quat {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Quat() = default;
    Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static Quat real(double a) { return {a, 0, 0, 0}; }
    static Quat e1() { return {0, 1, 0, 0}; }
    static Quat e2() { return {0, 0, 1, 0}; }
    static Quat e3() { return {0, 0, 0, 1}; }

    Quat conj() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const;

    Vec2 to_vec2() const { return {w, x}; }
    Vec3 to_vec3() const { return {w, x, y}; }

    friend Quat operator+(const Quat& p, const Quat& q) {
        return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
    }
    friend Quat operator-(const Quat& p, const Quat& q) {
        return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
    }
    friend Quat operator-(const Quat& q) { return {-q.w, -q.x, -q.y, -q.z}; }
    friend Quat operator*(double s, const Quat& q) {
        return {s * q.w, s * q.x, s * q.y, s * q.z};
    }
    friend Quat operator*(const Quat& p, const Quat& q) {
        return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
    }
};

Quat multiply(const Quat& p, const Quat& q);

/// (p, q) = (p.conj * q + q.conj * p) / 2, equal to the Euclidean 4-dot.
double scalar_product(const Quat& p, const Quat& q);

/// exp(e1 * angle) = cos(angle) + e1 sin(angle).
Quat rotor(double angle);

bool approx_equal(const Quat& p, const Quat& q, double tol = 1e-9);

/// Sandwich transform Lambda -> left * Lambda * right, with the argument
/// conjugated first when starred. Unit left/right give an O(4) isometry.
struct PairTransform {
    Quat left;
    Quat right;
    bool starred = false;

    Quat apply(const Quat& v) const;

    /// Matrix of the induced linear action on the basis {1, e1, e2, e3},
    /// stored column-major. [s,t] and [-s,-t] induce the same matrix.
    std::array<double, 16> matrix() const;
};

Quat act(const PairTransform& t, const Quat& v);

/// The 4n unit quaternions {q^k, q^k e2} with q = exp(e1 pi/n); closed under
/// multiplication (the dicyclic group of order 4n).
std::vector<Quat> dicyclic_root_system(int n);

/// Order of {[s,t]} union {[s,t]*} over s,t from dicyclic_root_system(n),
/// counted as distinct O(4) actions. Equals 16 n^2.
long aut_group_order(int n);

}  // namespace qrpoly
