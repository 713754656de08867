#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinnet {

enum class Parity { all, even, odd };

Parity parity_from_string(const std::string& name);
std::string to_string(Parity parity);

enum class FitKind { polynomial, loglog_polynomial, power_law };

std::string to_string(FitKind kind);

// Least-squares fit summary. Coefficients are ascending powers of x (or of
// log x for the log-space kinds); residual is the RMS misfit in fit space.
struct ScalingFit {
    FitKind kind = FitKind::polynomial;
    Parity parity = Parity::all;
    int degree = 0;
    std::vector<double> coefficients;
    double exponent = 0.0;  // power_law only: the log-log slope
    double residual = 0.0;
    int n_points = 0;
    double x_min = 0.0;
    double x_max = 0.0;
};

// 4 (<M_x^2> - <M_x>^2) on a normalized state vector. Ground-state Fisher
// information for field sensing with generator M_x.
double generator_qfi_ground(const Eigen::VectorXd& state, int n_spins);

// xi^2 = F_Q / n; values above 1 indicate a metrologically useful state.
double spin_squeezing(double qfi, int n_spins);

// Degree-d polynomial least squares (d <= 4, strictly overdetermined).
// log_space fits log y against powers of log x and requires positive data.
ScalingFit polynomial_fit(const std::vector<double>& xs, const std::vector<double>& ys,
                          int degree, bool log_space);

// Filters by parity of N, then a degree-1 log-log fit; exponent = slope.
ScalingFit power_law_fit(const std::vector<double>& ns, const std::vector<double>& fs,
                         Parity parity);

}  // namespace spinnet
