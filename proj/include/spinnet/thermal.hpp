#pragma once

#include <Eigen/Dense>

#include "spinnet/graph.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/spectral.hpp"

namespace spinnet {

// Gibbs populations over an eigensystem. Probabilities sum to 1 and are
// ordered like the spectrum (ascending energy, so p is non-increasing).
struct GibbsEnsemble {
    Eigen::VectorXd probabilities;
    double log_partition = 0.0;
    double beta = 0.0;
    Spectrum spectrum;
};

GibbsEnsemble gibbs_weights(Spectrum spec, double temperature);

// lnZ with max-shift; beta * |E| can exceed 700 well before N hits the cap.
double log_partition(const Eigen::VectorXd& eigenvalues, double beta);

// Fisher information of the Gibbs state w.r.t. the transverse field, split
// into the population (classical) and coherence parts. value = classical +
// coherent.
struct QfiValue {
    double value = 0.0;
    double classical = 0.0;
    double coherent = 0.0;
};

QfiValue thermal_qfi_sld(const Graph& g, const SpinSystemParams& p);

// Independent estimate from the Uhlmann fidelity between Gibbs states at
// field +- delta/2: 8(1 - sqrt(F)) / delta^2.
double fidelity_qfi_oracle(const Graph& g, const SpinSystemParams& p,
                           double delta = 1e-3);

// chi_x = (1/(N beta)) d^2 lnZ / dh^2, central second difference.
double susceptibility_chi_x(const Graph& g, const SpinSystemParams& p,
                            double delta_h = 1e-4);

// Thermal Var(M_x) next to its fluctuation-dissipation estimate (N/beta)
// chi_x. The two agree only when the zz part commutes with M_x; the pair is
// reported so the gap stays visible.
struct MagnetizationVariance {
    double direct = 0.0;
    double fdt_estimate = 0.0;
    double relative_deviation = 0.0;
};

MagnetizationVariance magnetization_variance(const Graph& g, const SpinSystemParams& p);

}  // namespace spinnet
