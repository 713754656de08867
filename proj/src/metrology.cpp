#include "spinnet/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinnet/hamiltonian.hpp"

namespace spinnet {

Parity parity_from_string(const std::string& name) {
    if (name == "all") return Parity::all;
    if (name == "even") return Parity::even;
    if (name == "odd") return Parity::odd;
    throw std::invalid_argument("unknown parity: " + name);
}

std::string to_string(Parity parity) {
    switch (parity) {
        case Parity::all: return "all";
        case Parity::even: return "even";
        case Parity::odd: return "odd";
    }
    throw std::invalid_argument("unknown parity enum value");
}

std::string to_string(FitKind kind) {
    switch (kind) {
        case FitKind::polynomial: return "polynomial";
        case FitKind::loglog_polynomial: return "loglog_polynomial";
        case FitKind::power_law: return "power_law";
    }
    throw std::invalid_argument("unknown fit kind enum value");
}

double generator_qfi_ground(const Eigen::VectorXd& state, int n_spins) {
    if (n_spins < 1) throw std::invalid_argument("generator_qfi_ground: need n >= 1");
    const Eigen::Index dim = Eigen::Index(1) << n_spins;
    if (state.size() != dim)
        throw std::invalid_argument("generator_qfi_ground: state dimension != 2^n");
    if (std::abs(state.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("generator_qfi_ground: state is not normalized");

    const Eigen::VectorXd mv = apply_collective_mx(state, n_spins);
    const double mean = state.dot(mv);
    const double second = mv.squaredNorm();
    return std::max(0.0, 4.0 * (second - mean * mean));
}

double spin_squeezing(double qfi, int n_spins) {
    if (n_spins < 1) throw std::invalid_argument("spin_squeezing: need n >= 1");
    return qfi / n_spins;
}

ScalingFit polynomial_fit(const std::vector<double>& xs, const std::vector<double>& ys,
                          int degree, bool log_space) {
    if (degree < 0 || degree > 4)
        throw std::invalid_argument("polynomial_fit: degree must be in [0, 4]");
    if (xs.size() != ys.size())
        throw std::invalid_argument("polynomial_fit: xs and ys length mismatch");
    const auto n = static_cast<Eigen::Index>(xs.size());
    if (n <= degree)
        throw std::invalid_argument("polynomial_fit: need more points than degree");

    Eigen::VectorXd x(n);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double xi = xs[i];
        double yi = ys[i];
        if (log_space) {
            if (!(xi > 0.0) || !(yi > 0.0))
                throw std::invalid_argument("polynomial_fit: log space needs positive data");
            xi = std::log(xi);
            yi = std::log(yi);
        }
        x[i] = xi;
        y[i] = yi;
    }

    Eigen::MatrixXd design(n, degree + 1);
    design.col(0).setOnes();
    for (int k = 1; k <= degree; ++k)
        design.col(k) = design.col(k - 1).cwiseProduct(x);

    const Eigen::VectorXd coeffs = design.colPivHouseholderQr().solve(y);

    ScalingFit fit;
    fit.kind = log_space ? FitKind::loglog_polynomial : FitKind::polynomial;
    fit.degree = degree;
    fit.coefficients.assign(coeffs.data(), coeffs.data() + coeffs.size());
    fit.residual = std::sqrt((design * coeffs - y).squaredNorm() / double(n));
    fit.n_points = static_cast<int>(n);
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    fit.x_min = *lo;
    fit.x_max = *hi;
    return fit;
}

ScalingFit power_law_fit(const std::vector<double>& ns, const std::vector<double>& fs,
                         Parity parity) {
    if (ns.size() != fs.size())
        throw std::invalid_argument("power_law_fit: length mismatch");
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto rounded = static_cast<long long>(std::llround(ns[i]));
        const bool even = rounded % 2 == 0;
        if (parity == Parity::even && !even) continue;
        if (parity == Parity::odd && even) continue;
        xs.push_back(ns[i]);
        ys.push_back(fs[i]);
    }
    if (xs.size() < 3)
        throw std::invalid_argument("power_law_fit: need >= 3 points after parity filter");

    ScalingFit fit = polynomial_fit(xs, ys, 1, true);
    fit.kind = FitKind::power_law;
    fit.parity = parity;
    fit.exponent = fit.coefficients[1];
    return fit;
}

}  // namespace spinnet
