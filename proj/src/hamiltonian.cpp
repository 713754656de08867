#include "spinnet/hamiltonian.hpp"

#include <stdexcept>
#include <string>

namespace spinnet {

Scaling scaling_from_string(const std::string& name) {
    if (name == "bare") return Scaling::bare;
    if (name == "kac") return Scaling::kac;
    throw std::invalid_argument("unknown scaling: " + name);
}

std::string to_string(Scaling scaling) {
    switch (scaling) {
        case Scaling::bare: return "bare";
        case Scaling::kac: return "kac";
    }
    throw std::invalid_argument("unknown scaling enum value");
}

double effective_coupling(double coupling, int n, Scaling scaling) {
    if (n < 1) throw std::invalid_argument("effective_coupling: node count must be >= 1");
    return scaling == Scaling::kac ? coupling / (2.0 * n) : coupling / 2.0;
}

namespace {

void check_size_cap(int n_spins, int max_spins, const char* where) {
    if (n_spins > max_spins)
        throw std::invalid_argument(std::string(where) + ": " + std::to_string(n_spins) +
                                    " spins exceeds the size cap of " +
                                    std::to_string(max_spins) +
                                    " (raise max_spins to override)");
}

}  // namespace

HamiltonianMatrix build_tfim(const Graph& g, const SpinSystemParams& p) {
    check_size_cap(g.n(), p.max_spins, "build_tfim");
    if (!is_connected(g)) throw std::invalid_argument("build_tfim: graph must be connected");

    const int n = g.n();
    const Eigen::Index dim = Eigen::Index(1) << n;
    const double j_eff = effective_coupling(p.coupling, n, p.scaling);

    HamiltonianMatrix h;
    h.n_spins = n;
    h.entries = Eigen::MatrixXd::Zero(dim, dim);

    for (Eigen::Index b = 0; b < dim; ++b) {
        double zz = 0.0;
        for (const auto& [u, v] : g.edges())
            zz += spin_z(static_cast<std::uint64_t>(b), u, n) *
                  spin_z(static_cast<std::uint64_t>(b), v, n);
        h.entries(b, b) = -j_eff * zz;
        // One-bit flips couple with -h; everything else stays zero.
        for (int bit = 0; bit < n; ++bit) {
            const Eigen::Index a = b ^ (Eigen::Index(1) << bit);
            h.entries(a, b) = -p.field;
        }
    }
    return h;
}

Eigen::MatrixXd collective_mx(int n_spins, int max_spins) {
    check_size_cap(n_spins, max_spins, "collective_mx");
    const Eigen::Index dim = Eigen::Index(1) << n_spins;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b)
        for (int bit = 0; bit < n_spins; ++bit) m(b ^ (Eigen::Index(1) << bit), b) = 1.0;
    return m;
}

namespace {

template <typename Vec>
Vec apply_mx(const Vec& v, int n_spins) {
    const Eigen::Index dim = Eigen::Index(1) << n_spins;
    if (v.size() != dim)
        throw std::invalid_argument("apply_collective_mx: state dimension " +
                                    std::to_string(v.size()) + " does not match 2^" +
                                    std::to_string(n_spins));
    Vec out = Vec::Zero(dim);
    for (Eigen::Index b = 0; b < dim; ++b)
        for (int bit = 0; bit < n_spins; ++bit) out[b] += v[b ^ (Eigen::Index(1) << bit)];
    return out;
}

}  // namespace

Eigen::VectorXd apply_collective_mx(const Eigen::VectorXd& v, int n_spins) {
    return apply_mx(v, n_spins);
}

Eigen::VectorXcd apply_collective_mx(const Eigen::VectorXcd& v, int n_spins) {
    return apply_mx(v, n_spins);
}

}  // namespace spinnet
