#include "spinnet/thermal.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

void require_positive_temperature(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("temperature must be > 0");
}

// M_x V, column by column through the bit-flip structure.
Eigen::MatrixXd mx_times(const Eigen::MatrixXd& v, int n_spins) {
    Eigen::MatrixXd out(v.rows(), v.cols());
    for (Eigen::Index c = 0; c < v.cols(); ++c)
        out.col(c) = apply_collective_mx(Eigen::VectorXd(v.col(c)), n_spins);
    return out;
}

}  // namespace

double log_partition(const Eigen::VectorXd& eigenvalues, double beta) {
    if (eigenvalues.size() == 0)
        throw std::invalid_argument("log_partition: empty spectrum");
    const double e_min = eigenvalues.minCoeff();
    double sum = 0.0;
    for (Eigen::Index j = 0; j < eigenvalues.size(); ++j)
        sum += std::exp(-beta * (eigenvalues[j] - e_min));
    return -beta * e_min + std::log(sum);
}

GibbsEnsemble gibbs_weights(Spectrum spec, double temperature) {
    require_positive_temperature(temperature);
    GibbsEnsemble ens;
    ens.beta = 1.0 / temperature;
    const Eigen::VectorXd& w = spec.eigenvalues;
    const double e_min = w.minCoeff();
    ens.probabilities.resize(w.size());
    for (Eigen::Index j = 0; j < w.size(); ++j)
        ens.probabilities[j] = std::exp(-ens.beta * (w[j] - e_min));
    const double norm = ens.probabilities.sum();
    ens.probabilities /= norm;
    ens.log_partition = -ens.beta * e_min + std::log(norm);
    ens.spectrum = std::move(spec);
    return ens;
}

QfiValue thermal_qfi_sld(const Graph& g, const SpinSystemParams& p) {
    require_positive_temperature(p.temperature);
    const GibbsEnsemble ens = gibbs_weights(eigensystem(build_tfim(g, p)), p.temperature);
    const double beta = ens.beta;
    const Eigen::VectorXd& lam = ens.spectrum.eigenvalues;
    const Eigen::VectorXd& prob = ens.probabilities;
    const Eigen::MatrixXd& vec = ens.spectrum.eigenvectors;

    // X = dH/dh = -M_x, taken to the energy eigenbasis.
    const Eigen::MatrixXd x = -(vec.transpose() * mx_times(vec, g.n()));

    const double x_mean = prob.dot(x.diagonal());
    QfiValue q;
    for (Eigen::Index j = 0; j < lam.size(); ++j) {
        const double l_jj = -beta * (x(j, j) - x_mean);
        q.classical += prob[j] * l_jj * l_jj;
    }
    for (Eigen::Index j = 0; j < lam.size(); ++j) {
        for (Eigen::Index k = j + 1; k < lam.size(); ++k) {
            // delta = g_j - g_k computed from the eigenvalues directly; the
            // lnZ terms cancel and must not be allowed to cancel in floating
            // point instead.
            const double delta = -beta * (lam[j] - lam[k]);
            const double f =
                std::abs(delta) < 1e-12 ? 1.0 : std::tanh(delta / 2.0) / (delta / 2.0);
            const double l_jk = f * (-beta * x(j, k));
            q.coherent += (prob[j] + prob[k]) * l_jk * l_jk;
        }
    }
    q.value = q.classical + q.coherent;
    return q;
}

double fidelity_qfi_oracle(const Graph& g, const SpinSystemParams& p, double delta) {
    require_positive_temperature(p.temperature);
    if (!(delta > 0.0)) throw std::invalid_argument("fidelity_qfi_oracle: delta must be > 0");

    SpinSystemParams lo = p;
    SpinSystemParams hi = p;
    lo.field = p.field - delta / 2.0;
    hi.field = p.field + delta / 2.0;

    const GibbsEnsemble e1 = gibbs_weights(eigensystem(build_tfim(g, lo)), p.temperature);
    const GibbsEnsemble e2 = gibbs_weights(eigensystem(build_tfim(g, hi)), p.temperature);

    // sqrt(F) = Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)) is the nuclear norm of
    // diag(sqrt p2) V2^T V1 diag(sqrt p1); summing singular values avoids the
    // precision loss of eigendecomposing the squared product, which matters
    // because 1 - sqrt(F) is of order delta^2.
    const Eigen::MatrixXd a = e2.probabilities.cwiseSqrt().asDiagonal() *
                              (e2.spectrum.eigenvectors.transpose() * e1.spectrum.eigenvectors) *
                              e1.probabilities.cwiseSqrt().asDiagonal();
    const double sqrt_fidelity =
        std::min(Eigen::BDCSVD<Eigen::MatrixXd>(a).singularValues().sum(), 1.0);

    return 8.0 * (1.0 - sqrt_fidelity) / (delta * delta);
}

double susceptibility_chi_x(const Graph& g, const SpinSystemParams& p, double delta_h) {
    require_positive_temperature(p.temperature);
    if (!(delta_h > 0.0)) throw std::invalid_argument("susceptibility_chi_x: step must be > 0");

    const double beta = p.beta();
    auto ln_z_at = [&](double field) {
        SpinSystemParams q = p;
        q.field = field;
        return log_partition(eigenvalues_only(build_tfim(g, q)), beta);
    };
    const double second_diff = ln_z_at(p.field + delta_h) - 2.0 * ln_z_at(p.field) +
                               ln_z_at(p.field - delta_h);
    return second_diff / (delta_h * delta_h) / (g.n() * beta);
}

MagnetizationVariance magnetization_variance(const Graph& g, const SpinSystemParams& p) {
    require_positive_temperature(p.temperature);
    const GibbsEnsemble ens = gibbs_weights(eigensystem(build_tfim(g, p)), p.temperature);

    double mx_mean = 0.0;
    double mx2_mean = 0.0;
    for (Eigen::Index j = 0; j < ens.probabilities.size(); ++j) {
        const Eigen::VectorXd v = ens.spectrum.eigenvectors.col(j);
        const Eigen::VectorXd mv = apply_collective_mx(v, g.n());
        mx_mean += ens.probabilities[j] * v.dot(mv);
        mx2_mean += ens.probabilities[j] * mv.squaredNorm();
    }

    MagnetizationVariance out;
    out.direct = mx2_mean - mx_mean * mx_mean;
    out.fdt_estimate = (g.n() / ens.beta) * susceptibility_chi_x(g, p);
    const double scale = std::max(std::abs(out.direct), 1e-300);
    out.relative_deviation = std::abs(out.direct - out.fdt_estimate) / scale;
    return out;
}

}  // namespace spinnet
