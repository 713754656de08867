#pragma once

#include <string>

#include <Eigen/Dense>

#include "spinnet/graph.hpp"

namespace spinnet {

// Dense 2^13 x 2^13 doubles is ~0.5 GB; the ceiling for full eigensystems
// on a desk machine. Raise SpinSystemParams::max_spins explicitly to go past.
inline constexpr int kDefaultMaxSpins = 13;

enum class Scaling { bare, kac };

Scaling scaling_from_string(const std::string& name);
std::string to_string(Scaling scaling);

struct SpinSystemParams {
    double coupling = -1.0;     // J; antiferromagnetic default
    double field = 0.05;        // transverse field h
    double temperature = 0.08;  // T, with k_B = 1
    Scaling scaling = Scaling::bare;
    int dn_levels = 2;          // levels entering the spectral deformation
    int max_spins = kDefaultMaxSpins;

    double beta() const { return 1.0 / temperature; }
};

// Basis convention shared by every module: basis index b in [0, 2^N)
// holds node i at bit (N-1-i), node 0 most significant; bit value 0 is
// spin-up, sigma_z = +1.
inline int spin_z(std::uint64_t basis, int node, int n_spins) {
    return ((basis >> (n_spins - 1 - node)) & 1ULL) ? -1 : +1;
}

struct HamiltonianMatrix {
    Eigen::MatrixXd entries;  // real symmetric, traceless
    int n_spins = 0;

    Eigen::Index dim() const { return entries.rows(); }
};

// bare: J/2; kac: J/(2n), keeping total interaction energy extensive.
double effective_coupling(double coupling, int n, Scaling scaling);

// H = -J_eff * sum_{(i,j) in E} sigma_z^i sigma_z^j - h * sum_i sigma_x^i.
// Rejects disconnected graphs and systems above the size cap.
HamiltonianMatrix build_tfim(const Graph& g, const SpinSystemParams& p);

// M_x = sum_i sigma_x^i: entry (a,b) = 1 iff a and b differ in exactly one bit.
Eigen::MatrixXd collective_mx(int n_spins, int max_spins = kDefaultMaxSpins);

// M_x * v without materializing the matrix.
Eigen::VectorXd apply_collective_mx(const Eigen::VectorXd& v, int n_spins);
Eigen::VectorXcd apply_collective_mx(const Eigen::VectorXcd& v, int n_spins);

}  // namespace spinnet
