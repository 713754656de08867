#pragma once

#include <complex>

#include <Eigen/Dense>

namespace spinnet {

// 1 degree steps on [0, pi] x [0, 2pi], endpoints included.
inline constexpr int kDefaultThetaSamples = 181;
inline constexpr int kDefaultPhiSamples = 361;

// Q(theta, phi) = |<theta, phi|psi>|^2 / pi on a product grid. q_values is
// theta-major: q_values(i, j) = Q(theta_samples[i], phi_samples[j]).
struct HusimiGrid {
    Eigen::VectorXd theta_samples;
    Eigen::VectorXd phi_samples;
    Eigen::MatrixXd q_values;
    int n_spins = 0;
};

// Product state with per-site amplitudes cos(theta/2) on spin-up and
// e^{i phi} sin(theta/2) on spin-down.
Eigen::VectorXcd spin_coherent_state(int n_spins, double theta, double phi);

HusimiGrid husimi_grid(const Eigen::VectorXcd& state,
                       int n_theta = kDefaultThetaSamples,
                       int n_phi = kDefaultPhiSamples);
HusimiGrid husimi_grid(const Eigen::VectorXd& state,
                       int n_theta = kDefaultThetaSamples,
                       int n_phi = kDefaultPhiSamples);

// Trapezoid quadrature of Q sin(theta) over the grid. Equals 4/(N+1) for
// permutation-symmetric pure states, and is smaller for generic states.
double husimi_norm_integral(const HusimiGrid& grid);

// |<theta=pi/2, phi|psi>| sampled along the equator, with the peak position.
struct EquatorialProfile {
    Eigen::VectorXd phi;
    Eigen::VectorXd abs_overlap;
    double argmax_phi = 0.0;
};

EquatorialProfile equatorial_overlap_profile(const Eigen::VectorXcd& state,
                                             int n_phi = kDefaultPhiSamples);
EquatorialProfile equatorial_overlap_profile(const Eigen::VectorXd& state,
                                             int n_phi = kDefaultPhiSamples);

// <S_x> three ways. symbol_estimate carries the (2J+1)(J+1)/4 prefactor and
// the sin(theta) measure, and reproduces `direct` for symmetric states;
// literal_integral drops both (kept as a labeled diagnostic); direct is
// <psi|M_x/2|psi>. `symmetric` records whether the state is permutation
// symmetric (amplitudes constant on popcount classes); when false the
// quadrature estimates do not track `direct`.
struct SxEstimate {
    double symbol_estimate = 0.0;
    double literal_integral = 0.0;
    double direct = 0.0;
    bool symmetric = false;
};

SxEstimate sx_from_husimi(const HusimiGrid& grid, const Eigen::VectorXcd& state);
SxEstimate sx_from_husimi(const HusimiGrid& grid, const Eigen::VectorXd& state);

}  // namespace spinnet
