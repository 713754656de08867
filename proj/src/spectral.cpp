#include "spinnet/spectral.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

void check_symmetric(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eigensystem: matrix must be square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double residual = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (residual > 1e-12 * scale)
        throw std::invalid_argument("eigensystem: matrix is not symmetric (residual " +
                                    std::to_string(residual) + ")");
}

// dsyevd: divide-and-conquer, ascending eigenvalues, vectors overwrite the
// input. LAPACKE manages workspace.
void dsyevd_inplace(char jobz, Eigen::MatrixXd& a, Eigen::VectorXd& w) {
    const auto n = static_cast<lapack_int>(a.rows());
    w.resize(n);
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, jobz, 'L', n, a.data(), n, w.data());
    if (info != 0)
        throw NumericError("dsyevd failed to converge (info = " + std::to_string(info) + ")");
}

}  // namespace

Spectrum eigensystem(const Eigen::MatrixXd& matrix) {
    check_symmetric(matrix);
    Spectrum s;
    s.eigenvectors = matrix;
    dsyevd_inplace('V', s.eigenvectors, s.eigenvalues);
    return s;
}

Eigen::VectorXd eigenvalues_only(const Eigen::MatrixXd& matrix) {
    check_symmetric(matrix);
    Eigen::MatrixXd a = matrix;
    Eigen::VectorXd w;
    dsyevd_inplace('N', a, w);
    return w;
}

double spectral_deformation_dn(const Graph& g, const SpinSystemParams& p) {
    const Eigen::Index dim = Eigen::Index(1) << g.n();
    if (p.dn_levels < 1)
        throw std::invalid_argument("spectral_deformation_dn: dn_levels must be >= 1");
    if (p.dn_levels > dim)
        throw std::invalid_argument("spectral_deformation_dn: dn_levels exceeds 2^N");

    SpinSystemParams unperturbed = p;
    unperturbed.field = 0.0;
    const Eigen::VectorXd at_field = eigenvalues_only(build_tfim(g, p));
    const Eigen::VectorXd at_zero = eigenvalues_only(build_tfim(g, unperturbed));

    double sum = 0.0;
    for (int i = 0; i < p.dn_levels; ++i) {
        const double shift = at_field[i] - at_zero[i];
        sum += shift * shift;
    }
    return std::sqrt(sum);
}

double energy_gap(const HamiltonianMatrix& h) {
    if (h.dim() < 2) throw std::invalid_argument("energy_gap: need dimension >= 2");
    const Eigen::VectorXd w = eigenvalues_only(h);
    return w[1] - w[0];
}

GroundState ground_state(const HamiltonianMatrix& h) {
    const Spectrum s = eigensystem(h);
    GroundState gs;
    gs.energy = s.eigenvalues[0];
    gs.amplitudes = s.eigenvectors.col(0);
    gs.degenerate = s.eigenvalues.size() > 1 && (s.eigenvalues[1] - s.eigenvalues[0]) <= 1e-10;

    // Sign fix: largest-magnitude amplitude positive, first index on ties.
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < gs.amplitudes.size(); ++i) {
        const double mag = std::abs(gs.amplitudes[i]);
        if (mag > best) {
            best = mag;
            pivot = i;
        }
    }
    if (gs.amplitudes[pivot] < 0.0) gs.amplitudes = -gs.amplitudes;
    return gs;
}

}  // namespace spinnet
