#pragma once

#include <Eigen/Dense>

#include "spinnet/hamiltonian.hpp"

namespace spinnet {

struct Spectrum {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns, matching order
};

// Full dense symmetric eigendecomposition. Throws std::invalid_argument on a
// non-symmetric input and NumericError if the solver fails to converge.
Spectrum eigensystem(const Eigen::MatrixXd& matrix);
inline Spectrum eigensystem(const HamiltonianMatrix& h) { return eigensystem(h.entries); }

// Ascending eigenvalues only; cheaper when vectors are not needed.
Eigen::VectorXd eigenvalues_only(const Eigen::MatrixXd& matrix);
inline Eigen::VectorXd eigenvalues_only(const HamiltonianMatrix& h) {
    return eigenvalues_only(h.entries);
}

// Fitness of a topology: Euclidean distance between the lowest dn_levels
// eigenvalues of H at field h and at field 0, each list sorted ascending.
double spectral_deformation_dn(const Graph& g, const SpinSystemParams& p);

// E_1 - E_0 of the full spectrum (0 for a degenerate ground level).
double energy_gap(const HamiltonianMatrix& h);

struct GroundState {
    Eigen::VectorXd amplitudes;  // unit norm, largest-magnitude entry positive
    double energy = 0.0;
    // Gap to the next level is below 1e-10: the returned representative is
    // deterministic but basis-arbitrary; phase-space consumers must check.
    bool degenerate = false;
};

GroundState ground_state(const HamiltonianMatrix& h);

}  // namespace spinnet
