#include "qrpoly/quat.hpp"

#include <cmath>
#include <stdexcept>

namespace qrpoly {

double Quat::norm() const { return std::sqrt(norm2()); }

Quat multiply(const Quat& p, const Quat& q) { return p * q; }

double scalar_product(const Quat& p, const Quat& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

Quat rotor(double angle) { return {std::cos(angle), std::sin(angle), 0, 0}; }

bool approx_equal(const Quat& p, const Quat& q, double tol) {
    return std::abs(p.w - q.w) <= tol && std::abs(p.x - q.x) <= tol &&
           std::abs(p.y - q.y) <= tol && std::abs(p.z - q.z) <= tol;
}

Quat PairTransform::apply(const Quat& v) const {
    return starred ? left * v.conj() * right : left * v * right;
}

std::array<double, 16> PairTransform::matrix() const {
    const Quat basis[4] = {Quat::real(1), Quat::e1(), Quat::e2(), Quat::e3()};
    std::array<double, 16> m{};
    for (int c = 0; c < 4; ++c) {
        const Quat img = apply(basis[c]);
        m[4 * c + 0] = img.w;
        m[4 * c + 1] = img.x;
        m[4 * c + 2] = img.y;
        m[4 * c + 3] = img.z;
    }
    return m;
}

Quat act(const PairTransform& t, const Quat& v) { return t.apply(v); }

std::vector<Quat> dicyclic_root_system(int n) {
    if (n < 2) throw std::invalid_argument("dicyclic_root_system: n must be >= 2");
    std::vector<Quat> elems;
    elems.reserve(4 * static_cast<std::size_t>(n));
    for (int k = 1; k <= 2 * n; ++k) {
        const Quat r = rotor(static_cast<double>(k) * kPi / n);
        elems.push_back(r);
        elems.push_back(r * Quat::e2());
    }
    return elems;
}

namespace {

bool same_matrix(const std::array<double, 16>& a, const std::array<double, 16>& b, double tol) {
    for (int i = 0; i < 16; ++i) {
        if (std::abs(a[i] - b[i]) > tol) return false;
    }
    return true;
}

}  // namespace

long aut_group_order(int n) {
    if (n < 2) throw std::invalid_argument("aut_group_order: n must be >= 2");
    const std::vector<Quat> roots = dicyclic_root_system(n);
    std::vector<std::array<double, 16>> mats;
    mats.reserve(2 * roots.size() * roots.size());
    for (const Quat& s : roots) {
        for (const Quat& t : roots) {
            for (bool star : {false, true}) {
                const PairTransform pt{s, t, star};
                const std::array<double, 16> m = pt.matrix();
                bool seen = false;
                for (const auto& known : mats) {
                    if (same_matrix(known, m, 1e-9)) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) mats.push_back(m);
            }
        }
    }
    return static_cast<long>(mats.size());
}

}  // namespace qrpoly
