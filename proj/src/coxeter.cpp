#include "qrpoly/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qrpoly {

namespace {

constexpr int kMaxN = 1000000;  // bounds orbit memory
constexpr double kDedupTol = 1e-9;
constexpr double kCrossCheckTol = 1e-10;

std::string quantized_key(const std::vector<double>& coeffs) {
    std::string key;
    key.reserve(coeffs.size() * sizeof(std::int64_t));
    for (double c : coeffs) {
        const auto q = static_cast<std::int64_t>(std::llround(c / kDedupTol));
        key.append(reinterpret_cast<const char*>(&q), sizeof(q));
    }
    return key;
}

}  // namespace

CoxeterSystem CoxeterSystem::build(int n, int rank) {
    if (n < 2) throw std::invalid_argument("CoxeterSystem: n must be >= 2");
    if (n > kMaxN) throw std::invalid_argument("CoxeterSystem: n exceeds the 10^6 cap");
    if (rank != 2 && rank != 3) throw std::invalid_argument("CoxeterSystem: rank must be 2 or 3");

    CoxeterSystem sys;
    sys.n_ = n;
    sys.rank_ = rank;

    const double theta = (n - 1) * kPi / n;  // angle between alpha1 and alpha2
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double rt2 = std::sqrt(2.0);

    sys.roots_ = {Quat::real(rt2), rt2 * rotor(theta)};
    sys.weights_ = {Quat{1.0 / rt2, -ct / (rt2 * st), 0, 0}, Quat{0, 1.0 / (rt2 * st), 0, 0}};
    if (rank == 3) {
        sys.roots_.push_back(rt2 * Quat::e2());
        sys.weights_.push_back(Quat{0, 0, 1.0 / rt2, 0});
    }

    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            sys.cartan_[i][j] = scalar_product(sys.roots_[i], sys.roots_[j]);
            sys.cartan_inv_[i][j] = scalar_product(sys.weights_[i], sys.weights_[j]);
        }
    }
    return sys;
}

Quat CoxeterSystem::cartesian_of(const std::vector<double>& coeffs) const {
    Quat v;
    for (int i = 0; i < rank_; ++i) v = v + coeffs[static_cast<std::size_t>(i)] * weights_[static_cast<std::size_t>(i)];
    return v;
}

WeightVector CoxeterSystem::weight_vector(std::vector<double> coeffs) const {
    if (static_cast<int>(coeffs.size()) != rank_)
        throw std::invalid_argument("weight_vector: coefficient count must match rank");
    WeightVector v;
    v.cartesian = cartesian_of(coeffs);
    v.coeffs = std::move(coeffs);
    return v;
}

WeightVector CoxeterSystem::reflect(int i, const WeightVector& v) const {
    if (i < 1 || i > rank_) throw std::invalid_argument("reflect: generator index out of range");
    const int g = i - 1;

    // Linear rule in the weight basis: (Lambda, alpha_i) = a_i by duality.
    std::vector<double> coeffs = v.coeffs;
    const double ai = v.coeffs[static_cast<std::size_t>(g)];
    for (int j = 0; j < rank_; ++j) coeffs[static_cast<std::size_t>(j)] -= ai * cartan_[g][j];
    WeightVector out;
    out.cartesian = cartesian_of(coeffs);
    out.coeffs = std::move(coeffs);

    // Quaternion sandwich must realize the same reflection.
    const Quat unit_root = (1.0 / std::sqrt(2.0)) * roots_[static_cast<std::size_t>(g)];
    const Quat sandwich = -(unit_root * v.cartesian.conj() * unit_root);
    if (!approx_equal(out.cartesian, sandwich, kCrossCheckTol))
        throw std::logic_error("reflect: linear and quaternion realizations disagree");
    return out;
}

std::vector<WeightVector> CoxeterSystem::orbit(const WeightVector& seed) const {
    std::vector<WeightVector> members;
    std::unordered_set<std::string> seen;
    std::deque<WeightVector> queue;

    WeightVector start = weight_vector(seed.coeffs);
    seen.insert(quantized_key(start.coeffs));
    members.push_back(start);
    queue.push_back(std::move(start));

    while (!queue.empty()) {
        const WeightVector cur = std::move(queue.front());
        queue.pop_front();
        for (int i = 1; i <= rank_; ++i) {
            WeightVector next = reflect(i, cur);
            const std::string key = quantized_key(next.coeffs);
            if (seen.insert(key).second) {
                members.push_back(next);
                queue.push_back(std::move(next));
            }
        }
    }

    auto angle_of = [](const WeightVector& v) { return polar_angle(v.cartesian.to_vec2()); };
    if (rank_ == 2) {
        std::sort(members.begin(), members.end(),
                  [&](const WeightVector& a, const WeightVector& b) {
                      return angle_of(a) < angle_of(b);
                  });
    } else {
        std::sort(members.begin(), members.end(),
                  [&](const WeightVector& a, const WeightVector& b) {
                      const auto qa = std::llround(a.cartesian.y / kDedupTol);
                      const auto qb = std::llround(b.cartesian.y / kDedupTol);
                      if (qa != qb) return qa > qb;  // x3 descending
                      return angle_of(a) < angle_of(b);
                  });
    }
    return members;
}

WeightVector CoxeterSystem::rotate_power(int k, const WeightVector& v) const {
    if (rank_ != 2) throw std::invalid_argument("rotate_power: rank-2 systems only");
    int steps = k % n_;
    if (steps < 0) steps += n_;

    WeightVector cur = weight_vector(v.coeffs);
    for (int s = 0; s < steps; ++s) cur = reflect(1, reflect(2, cur));

    const Quat expected = rotor(2.0 * kPi * k / n_) * v.cartesian;
    if (!approx_equal(cur.cartesian, expected, kCrossCheckTol))
        throw std::logic_error("rotate_power: generator product and rotor disagree");
    return cur;
}

WeightVector CoxeterSystem::diagram_swap(const WeightVector& v) const {
    if (rank_ != 2) throw std::invalid_argument("diagram_swap: rank-2 systems only");
    return weight_vector({v.coeffs[1], v.coeffs[0]});
}

Vec2 CoxeterSystem::gamma_reflect(Vec2 p) const {
    // Reflection across the omega1/omega2 bisector, at angle pi/2 - pi/(2n).
    const double axis = kPi / 2.0 - kPi / (2.0 * n_);
    const double c = std::cos(2.0 * axis), s = std::sin(2.0 * axis);
    return {c * p.x + s * p.y, s * p.x - c * p.y};
}

}  // namespace qrpoly
