#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "spinnet/graph.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/spectral.hpp"

using namespace spinnet;

namespace {

SpinSystemParams with_field(double h) {
    SpinSystemParams p;
    p.field = h;
    return p;
}

// Two coupled spins split into a +-sqrt(J_eff^2 + 4h^2) doublet around the
// two unshifted anti-aligned levels; closed form used as the reference.
constexpr double kTwoSpinOuter = 0.50990195135927845;  // sqrt(0.26) at h = 0.05

}  // namespace

TEST_CASE("eigensystem solves the one-spin field matrix") {
    Eigen::MatrixXd m(2, 2);
    m << 0.0, -0.05, -0.05, 0.0;
    const Spectrum s = eigensystem(m);
    CHECK(s.eigenvalues[0] == doctest::Approx(-0.05).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(0.05).epsilon(1e-12));
    // Columns are orthonormal and reconstruct the input.
    const Eigen::MatrixXd v = s.eigenvectors;
    CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          1e-14);
    const Eigen::MatrixXd rebuilt = v * s.eigenvalues.asDiagonal() * v.transpose();
    CHECK((rebuilt - m).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("eigensystem sorts ascending and passes diagonal input through") {
    Eigen::MatrixXd m = Eigen::Vector4d(3.0, -1.0, 2.0, 0.5).asDiagonal();
    const Eigen::VectorXd w = eigenvalues_only(m);
    CHECK(w[0] == doctest::Approx(-1.0));
    CHECK(w[1] == doctest::Approx(0.5));
    CHECK(w[2] == doctest::Approx(2.0));
    CHECK(w[3] == doctest::Approx(3.0));
}

TEST_CASE("eigensystem rejects asymmetric input") {
    Eigen::MatrixXd bad(2, 2);
    bad << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(eigensystem(bad), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalues_only(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("two-spin spectrum has the closed-form doublet structure") {
    const Graph g = standard_graph(GraphKind::path, 2);
    const Eigen::VectorXd w = eigenvalues_only(build_tfim(g, with_field(0.05)));
    CHECK(w[0] == doctest::Approx(-kTwoSpinOuter).epsilon(1e-9));
    CHECK(w[1] == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(w[2] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(w[3] == doctest::Approx(kTwoSpinOuter).epsilon(1e-9));
}

TEST_CASE("low-level deformation distance") {
    SUBCASE("one spin shifts both levels by h") {
        CHECK(spectral_deformation_dn(Graph(), with_field(0.05)) ==
              doctest::Approx(0.05 * std::sqrt(2.0)).epsilon(1e-9));
    }
    SUBCASE("zero field means zero deformation") {
        CHECK(spectral_deformation_dn(standard_graph(GraphKind::complete, 3),
                                      with_field(0.0)) == doctest::Approx(0.0));
    }
    SUBCASE("two spins move only the ground level at second order") {
        // Levels at h: (-sqrt(0.26), -1/2); at 0: (-1/2, -1/2).
        CHECK(spectral_deformation_dn(standard_graph(GraphKind::path, 2),
                                      with_field(0.05)) ==
              doctest::Approx(kTwoSpinOuter - 0.5).epsilon(1e-9));
    }
    SUBCASE("node labels do not matter") {
        const SpinSystemParams p;
        CHECK(spectral_deformation_dn(standard_graph(GraphKind::path, 3), p) ==
              doctest::Approx(spectral_deformation_dn(Graph(3, {{0, 2}, {1, 2}}), p))
                  .epsilon(1e-10));
    }
    SUBCASE("level count is validated against the dimension") {
        SpinSystemParams p;
        p.dn_levels = 0;
        CHECK_THROWS_AS(spectral_deformation_dn(Graph(), p), std::invalid_argument);
        p.dn_levels = 5;
        CHECK_THROWS_AS(spectral_deformation_dn(standard_graph(GraphKind::path, 2), p),
                        std::invalid_argument);
    }
}

TEST_CASE("energy gap") {
    const Graph pair = standard_graph(GraphKind::path, 2);
    CHECK(energy_gap(build_tfim(pair, with_field(0.1))) ==
          doctest::Approx(std::sqrt(0.29) - 0.5).epsilon(1e-9));
    // Degenerate anti-aligned ground pair at zero field.
    CHECK(energy_gap(build_tfim(pair, with_field(0.0))) == doctest::Approx(0.0));
    CHECK(energy_gap(build_tfim(Graph(), with_field(0.1))) ==
          doctest::Approx(0.2).epsilon(1e-12));

    HamiltonianMatrix scalar;
    scalar.entries = Eigen::MatrixXd::Zero(1, 1);
    scalar.n_spins = 0;
    CHECK_THROWS_AS(energy_gap(scalar), std::invalid_argument);
}

TEST_CASE("ground state of one spin points along +x") {
    const GroundState gs = ground_state(build_tfim(Graph(), with_field(0.05)));
    CHECK(gs.energy == doctest::Approx(-0.05).epsilon(1e-12));
    CHECK(gs.amplitudes[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(gs.amplitudes[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(!gs.degenerate);
}

TEST_CASE("two-spin ground state matches the block-diagonal closed form") {
    const GroundState gs = ground_state(build_tfim(standard_graph(GraphKind::path, 2),
                                                   with_field(0.05)));
    // In the (|00>+|11>, |01>+|10>) sector the ground vector has component
    // ratio r = (1/2 + sqrt(0.26)) / 0.1 in favor of the anti-aligned pair.
    const double r = (0.5 + std::sqrt(0.26)) / 0.1;
    const double norm = std::sqrt(1.0 + r * r);
    const double aligned = 1.0 / (norm * std::sqrt(2.0));
    const double anti = r / (norm * std::sqrt(2.0));
    CHECK(gs.energy == doctest::Approx(-kTwoSpinOuter).epsilon(1e-12));
    CHECK(gs.amplitudes[0] == doctest::Approx(aligned).epsilon(1e-9));
    CHECK(gs.amplitudes[1] == doctest::Approx(anti).epsilon(1e-9));
    CHECK(gs.amplitudes[2] == doctest::Approx(anti).epsilon(1e-9));
    CHECK(gs.amplitudes[3] == doctest::Approx(aligned).epsilon(1e-9));
    CHECK(gs.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(!gs.degenerate);
}

TEST_CASE("ground state flags degeneracy and fixes the overall sign") {
    const GroundState gs =
        ground_state(build_tfim(standard_graph(GraphKind::path, 2), with_field(0.0)));
    CHECK(gs.degenerate);

    // Largest-magnitude amplitude comes out positive for any input sign.
    for (double h : {0.05, -0.05, 0.3}) {
        const GroundState s = ground_state(build_tfim(Graph(), with_field(h)));
        double peak = 0.0;
        for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i)
            if (std::abs(s.amplitudes[i]) > std::abs(peak)) peak = s.amplitudes[i];
        CHECK(peak > 0.0);
    }
}
