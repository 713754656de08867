#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "spinnet/graph.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/metrology.hpp"
#include "spinnet/rng.hpp"
#include "spinnet/spectral.hpp"

using namespace spinnet;

TEST_CASE("generator variance vanishes on a product state along +x") {
    const Eigen::VectorXd plus = Eigen::VectorXd::Constant(4, 0.5);
    CHECK(generator_qfi_ground(plus, 2) == doctest::Approx(0.0));
}

TEST_CASE("two-spin ground state beats the shot-noise bound") {
    const GroundState gs =
        ground_state(build_tfim(standard_graph(GraphKind::path, 2), SpinSystemParams{}));
    // Closed form via the symmetric-sector ratio r = (1/2 + sqrt(0.26)) / 0.1:
    // F = 16 (1 - 4 (r / (1 + r^2))^2).
    const double r = (0.5 + std::sqrt(0.26)) / 0.1;
    const double c = r / (1.0 + r * r);
    const double expected = 16.0 * (1.0 - 4.0 * c * c);
    CHECK(generator_qfi_ground(gs.amplitudes, 2) ==
          doctest::Approx(expected).epsilon(1e-6));
    CHECK(expected > 8.0);  // above the 4n ceiling of any product state
}

TEST_CASE("two-spin cat state saturates the Heisenberg bound") {
    Eigen::VectorXd cat(4);
    cat << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
    // Flipping both spins maps the branches onto each other, so <M_x^2> = 4.
    CHECK(generator_qfi_ground(cat, 2) == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("generator variance ignores the global sign") {
    const GroundState gs =
        ground_state(build_tfim(standard_graph(GraphKind::cycle, 3), SpinSystemParams{}));
    CHECK(generator_qfi_ground(gs.amplitudes, 3) ==
          doctest::Approx(generator_qfi_ground(-gs.amplitudes, 3)).epsilon(1e-12));
}

TEST_CASE("generator variance stays below the Heisenberg ceiling") {
    auto rng = make_rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        Eigen::VectorXd v(8);
        for (int i = 0; i < 8; ++i) v[i] = uniform_range(rng, -1.0, 1.0);
        v.normalize();
        const double f = generator_qfi_ground(v, 3);
        CHECK(f >= 0.0);
        CHECK(f <= 4.0 * 9.0 + 1e-9);
    }
}

TEST_CASE("generator variance validates its input") {
    CHECK_THROWS_AS(generator_qfi_ground(Eigen::VectorXd::Ones(4), 2),
                    std::invalid_argument);  // not normalized
    CHECK_THROWS_AS(generator_qfi_ground(Eigen::VectorXd::Ones(3), 2),
                    std::invalid_argument);  // dimension != 2^n
    CHECK_THROWS_AS(generator_qfi_ground(Eigen::VectorXd::Ones(1), 0),
                    std::invalid_argument);
}

TEST_CASE("per-spin sensitivity gain") {
    CHECK(spin_squeezing(16.0, 2) == doctest::Approx(8.0));
    CHECK(spin_squeezing(0.0, 5) == 0.0);
    CHECK(spin_squeezing(25.0, 5) == doctest::Approx(5.0));
    CHECK_THROWS_AS(spin_squeezing(1.0, 0), std::invalid_argument);
}

TEST_CASE("polynomial fit recovers exact coefficients") {
    const std::vector<double> xs = {0.0, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(2.0 + 3.0 * x + x * x);
    const ScalingFit fit = polynomial_fit(xs, ys, 2, false);
    CHECK(fit.kind == FitKind::polynomial);
    CHECK(fit.degree == 2);
    REQUIRE(fit.coefficients.size() == 3);
    CHECK(fit.coefficients[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.coefficients[1] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.coefficients[2] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.residual <= 1e-9);
    CHECK(fit.n_points == 5);
    CHECK(fit.x_min == 0.0);
    CHECK(fit.x_max == 4.0);
}

TEST_CASE("log-space fit linearizes a pure power") {
    const std::vector<double> xs = {1.0, 2.0, 4.0, 8.0};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(5.0 * x * x * x);
    const ScalingFit fit = polynomial_fit(xs, ys, 1, true);
    CHECK(fit.kind == FitKind::loglog_polynomial);
    CHECK(fit.coefficients[0] == doctest::Approx(std::log(5.0)).epsilon(1e-9));
    CHECK(fit.coefficients[1] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.residual <= 1e-9);
    // Bounds are reported in raw units, not log units.
    CHECK(fit.x_min == 1.0);
    CHECK(fit.x_max == 8.0);
}

TEST_CASE("fit residual reports the RMS misfit") {
    // The (+,-,-,+) perturbation is orthogonal to both regressors, so the
    // line is unchanged and the residual equals the perturbation size.
    const std::vector<double> xs = {0.0, 1.0, 2.0, 3.0};
    const std::vector<double> ys = {1.1, 2.9, 4.9, 7.1};
    const ScalingFit fit = polynomial_fit(xs, ys, 1, false);
    CHECK(fit.coefficients[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.coefficients[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.residual == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("polynomial fit rejects bad requests") {
    const std::vector<double> xs = {1.0, 2.0, 3.0};
    const std::vector<double> ys = {1.0, 4.0, 9.0};
    CHECK_THROWS_AS(polynomial_fit(xs, ys, 3, false), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_fit(xs, ys, 5, false), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_fit(xs, ys, -1, false), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_fit(xs, {1.0, 2.0}, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_fit({-1.0, 2.0, 3.0}, ys, 1, true), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_fit(xs, {0.0, 4.0, 9.0}, 1, true), std::invalid_argument);
}

TEST_CASE("power-law fit slices by parity before fitting") {
    std::vector<double> ns;
    std::vector<double> fs;
    for (int n = 2; n <= 9; ++n) {
        ns.push_back(n);
        // Evens follow N^2, odds follow 3N; the slices see clean powers.
        fs.push_back(n % 2 == 0 ? double(n) * n : 3.0 * n);
    }
    const ScalingFit even = power_law_fit(ns, fs, Parity::even);
    CHECK(even.kind == FitKind::power_law);
    CHECK(even.parity == Parity::even);
    CHECK(even.exponent == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(even.n_points == 4);
    CHECK(even.x_min == 2.0);
    CHECK(even.x_max == 8.0);

    const ScalingFit odd = power_law_fit(ns, fs, Parity::odd);
    CHECK(odd.exponent == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(odd.n_points == 4);

    // A constant prefactor moves the intercept only.
    std::vector<double> scaled = fs;
    for (double& f : scaled) f *= 7.0;
    const ScalingFit rescaled = power_law_fit(ns, scaled, Parity::even);
    CHECK(rescaled.exponent == doctest::Approx(even.exponent).epsilon(1e-9));
    CHECK(rescaled.coefficients[0] ==
          doctest::Approx(even.coefficients[0] + std::log(7.0)).epsilon(1e-9));
}

TEST_CASE("power-law fit needs three surviving points") {
    CHECK_THROWS_AS(power_law_fit({2.0, 3.0, 4.0}, {1.0, 1.0, 1.0}, Parity::even),
                    std::invalid_argument);
    CHECK_NOTHROW(power_law_fit({2.0, 3.0, 4.0, 6.0}, {1.0, 2.0, 3.0, 4.0}, Parity::even));
    CHECK_THROWS_AS(power_law_fit({1.0, 2.0}, {1.0, 2.0, 3.0}, Parity::all),
                    std::invalid_argument);
}

TEST_CASE("fit kind and parity names") {
    CHECK(to_string(FitKind::power_law) == "power_law");
    CHECK(to_string(FitKind::loglog_polynomial) == "loglog_polynomial");
    CHECK(parity_from_string("even") == Parity::even);
    CHECK(parity_from_string(to_string(Parity::odd)) == Parity::odd);
    CHECK_THROWS_AS(parity_from_string("mixed"), std::invalid_argument);
}
