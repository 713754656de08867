#include "spinnet/phasespace.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinnet/hamiltonian.hpp"

namespace spinnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

int infer_spins(Eigen::Index dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("state dimension must be a power of two, >= 2");
    int n = 0;
    while ((Eigen::Index(1) << n) < dim) ++n;
    if (n > kDefaultMaxSpins)
        throw std::invalid_argument("state exceeds the spin-count cap");
    return n;
}

void require_unit(const Eigen::VectorXcd& state) {
    if (std::abs(state.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("state is not normalized");
}

// Coherent amplitudes depend on a basis state only through its popcount, so
// overlaps collapse to n+1 per-popcount amplitude sums.
std::vector<std::complex<double>> popcount_sums(const Eigen::VectorXcd& state, int n) {
    std::vector<std::complex<double>> sums(n + 1, 0.0);
    for (Eigen::Index b = 0; b < state.size(); ++b)
        sums[std::popcount(static_cast<unsigned long long>(b))] += state[b];
    return sums;
}

// <theta, phi | psi> = sum_k cos(t/2)^{n-k} sin(t/2)^k e^{-ik phi} S_k.
std::complex<double> overlap_at(const std::vector<std::complex<double>>& sums,
                                double theta, double phi) {
    const int n = static_cast<int>(sums.size()) - 1;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::complex<double> z = std::polar(1.0, -phi);
    // Horner over descending k keeps one rotor multiply per term.
    std::complex<double> acc = 0.0;
    for (int k = n; k >= 1; --k) {
        acc = (acc + std::pow(c, n - k) * std::pow(s, k) * sums[k]) * z;
    }
    return acc + std::pow(c, n) * sums[0];
}

Eigen::VectorXd trapezoid_weights(const Eigen::VectorXd& x) {
    if (x.size() < 2) throw std::invalid_argument("quadrature needs >= 2 samples");
    Eigen::VectorXd w = Eigen::VectorXd::Zero(x.size());
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
        const double half = (x[i + 1] - x[i]) / 2.0;
        w[i] += half;
        w[i + 1] += half;
    }
    return w;
}

bool is_permutation_symmetric(const Eigen::VectorXcd& state, int n) {
    std::vector<std::complex<double>> sums = popcount_sums(state, n);
    std::vector<double> counts(n + 1, 0.0);
    for (Eigen::Index b = 0; b < state.size(); ++b)
        counts[std::popcount(static_cast<unsigned long long>(b))] += 1.0;
    double worst = 0.0;
    for (Eigen::Index b = 0; b < state.size(); ++b) {
        const int k = std::popcount(static_cast<unsigned long long>(b));
        worst = std::max(worst, std::abs(state[b] - sums[k] / counts[k]));
    }
    return worst <= 1e-8;
}

}  // namespace

Eigen::VectorXcd spin_coherent_state(int n_spins, double theta, double phi) {
    if (n_spins < 1 || n_spins > kDefaultMaxSpins)
        throw std::invalid_argument("spin_coherent_state: n outside [1, cap]");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::complex<double> down = std::polar(s, phi);
    const Eigen::Index dim = Eigen::Index(1) << n_spins;
    Eigen::VectorXcd state(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const int k = std::popcount(static_cast<unsigned long long>(b));
        state[b] = std::pow(c, n_spins - k) * std::pow(down, k);
    }
    return state;
}

HusimiGrid husimi_grid(const Eigen::VectorXcd& state, int n_theta, int n_phi) {
    if (n_theta < 2 || n_phi < 2)
        throw std::invalid_argument("husimi_grid: need >= 2 samples per axis");
    require_unit(state);

    HusimiGrid grid;
    grid.n_spins = infer_spins(state.size());
    grid.theta_samples = Eigen::VectorXd::LinSpaced(n_theta, 0.0, kPi);
    grid.phi_samples = Eigen::VectorXd::LinSpaced(n_phi, 0.0, 2.0 * kPi);
    grid.q_values.resize(n_theta, n_phi);

    const std::vector<std::complex<double>> sums = popcount_sums(state, grid.n_spins);
    for (int i = 0; i < n_theta; ++i) {
        for (int j = 0; j < n_phi; ++j) {
            const std::complex<double> ov =
                overlap_at(sums, grid.theta_samples[i], grid.phi_samples[j]);
            grid.q_values(i, j) = std::norm(ov) / kPi;
        }
    }
    return grid;
}

HusimiGrid husimi_grid(const Eigen::VectorXd& state, int n_theta, int n_phi) {
    return husimi_grid(Eigen::VectorXcd(state.cast<std::complex<double>>()), n_theta, n_phi);
}

double husimi_norm_integral(const HusimiGrid& grid) {
    const Eigen::VectorXd wt = trapezoid_weights(grid.theta_samples);
    const Eigen::VectorXd wp = trapezoid_weights(grid.phi_samples);
    const Eigen::VectorXd row = wt.cwiseProduct(grid.theta_samples.array().sin().matrix());
    return row.transpose() * grid.q_values * wp;
}

EquatorialProfile equatorial_overlap_profile(const Eigen::VectorXcd& state, int n_phi) {
    if (n_phi < 2) throw std::invalid_argument("equatorial profile: need >= 2 samples");
    require_unit(state);
    const int n = infer_spins(state.size());
    const std::vector<std::complex<double>> sums = popcount_sums(state, n);

    EquatorialProfile prof;
    prof.phi = Eigen::VectorXd::LinSpaced(n_phi, 0.0, 2.0 * kPi);
    prof.abs_overlap.resize(n_phi);
    Eigen::Index best = 0;
    for (Eigen::Index j = 0; j < n_phi; ++j) {
        prof.abs_overlap[j] = std::abs(overlap_at(sums, kPi / 2.0, prof.phi[j]));
        if (prof.abs_overlap[j] > prof.abs_overlap[best]) best = j;
    }
    prof.argmax_phi = prof.phi[best];
    return prof;
}

EquatorialProfile equatorial_overlap_profile(const Eigen::VectorXd& state, int n_phi) {
    return equatorial_overlap_profile(Eigen::VectorXcd(state.cast<std::complex<double>>()),
                                      n_phi);
}

SxEstimate sx_from_husimi(const HusimiGrid& grid, const Eigen::VectorXcd& state) {
    if (state.size() != (Eigen::Index(1) << grid.n_spins))
        throw std::invalid_argument("sx_from_husimi: state does not match grid spin count");
    require_unit(state);

    const Eigen::VectorXd wt = trapezoid_weights(grid.theta_samples);
    const Eigen::VectorXd wp = trapezoid_weights(grid.phi_samples);
    const Eigen::VectorXd sin_t = grid.theta_samples.array().sin();
    const Eigen::VectorXd cos_p = grid.phi_samples.array().cos();
    const Eigen::VectorXd phi_part = grid.q_values * wp.cwiseProduct(cos_p);

    SxEstimate est;
    for (Eigen::Index i = 0; i < grid.theta_samples.size(); ++i) {
        est.literal_integral += wt[i] * sin_t[i] * phi_part[i];
        est.symbol_estimate += wt[i] * sin_t[i] * sin_t[i] * phi_part[i];
    }
    const double j = grid.n_spins / 2.0;
    est.symbol_estimate *= (2.0 * j + 1.0) * (j + 1.0) / 4.0;
    est.direct = 0.5 * std::real(state.dot(apply_collective_mx(state, grid.n_spins)));
    est.symmetric = is_permutation_symmetric(state, grid.n_spins);
    return est;
}

SxEstimate sx_from_husimi(const HusimiGrid& grid, const Eigen::VectorXd& state) {
    return sx_from_husimi(grid, Eigen::VectorXcd(state.cast<std::complex<double>>()));
}

}  // namespace spinnet
