#pragma once

#include <array>
#include <vector>

#include "qrpoly/quat.hpp"

namespace qrpoly {

/// Coefficients in the fundamental-weight basis plus the Cartesian point they
/// realize (2D in the (w,e1) plane, 3D adds the e2 axis).
struct WeightVector {
    std::vector<double> coeffs;
    Quat cartesian;
};

/// I2(n) (rank 2) or I2(n) + A1 (rank 3) Coxeter system: simple roots of norm
/// sqrt(2), Cartan matrix and inverse, fundamental weights, reflection
/// generators realized both linearly and as quaternion sandwiches.
class CoxeterSystem {
  public:
    static CoxeterSystem build(int n, int rank);

    int n() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<Quat>& simple_roots() const { return roots_; }
    const std::vector<Quat>& weights() const { return weights_; }
    double cartan(int i, int j) const { return cartan_[i][j]; }
    double cartan_inv(int i, int j) const { return cartan_inv_[i][j]; }

    WeightVector weight_vector(std::vector<double> coeffs) const;

    /// Reflection r_i (1-based generator index). Computed by the linear rule
    /// Lambda - (Lambda, alpha_i) alpha_i and cross-checked against the
    /// quaternion sandwich -(alpha_i/sqrt2) conj(Lambda) (alpha_i/sqrt2);
    /// the two must agree to 1e-10.
    WeightVector reflect(int i, const WeightVector& v) const;

    /// Closure of {v} under all generators, deduplicated at 1e-9.
    /// Rank 2: sorted CCW starting at the smallest nonnegative polar angle.
    /// Rank 3: sorted by x3 descending, CCW within each layer.
    std::vector<WeightVector> orbit(const WeightVector& v) const;

    /// (r1 r2)^k, which must equal left-multiplication by rotor(2 pi k / n).
    WeightVector rotate_power(int k, const WeightVector& v) const;

    /// Diagram symmetry gamma: swaps the first two weight coefficients.
    WeightVector diagram_swap(const WeightVector& v) const;

    /// Cartesian realization of the gamma symmetry: reflection across the
    /// bisector of omega1 and omega2.
    Vec2 gamma_reflect(Vec2 p) const;

  private:
    CoxeterSystem() = default;

    Quat cartesian_of(const std::vector<double>& coeffs) const;

    int n_ = 0;
    int rank_ = 0;
    std::vector<Quat> roots_;
    std::vector<Quat> weights_;
    std::array<std::array<double, 3>, 3> cartan_{};
    std::array<std::array<double, 3>, 3> cartan_inv_{};
};

}  // namespace qrpoly
