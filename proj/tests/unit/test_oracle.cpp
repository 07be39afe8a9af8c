#include "support.hpp"

#include "cbjc/evolve.hpp"
#include "cbjc/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace cbjc;
using testing::cd;

namespace {

double log_slope(const std::vector<double>& t, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double ly = std::log(y[i]);
        sx += t[i];
        sy += ly;
        sxx += t[i] * t[i];
        sxy += t[i] * ly;
    }
    return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("no bath modes gives vacuum Rabi oscillation") {
    const SystemParams p{1.0, 1.0, 0.1, 1};
    DiscretizedBath empty;
    empty.delta_omega = 1.0;
    empty.omega_max = 1.0;
    const auto grid = uniform_grid(60.0, 0.7);
    const ExactSeries s = exact_evolve(p, empty, SingleExcitationState::system(1.0, 0.0, 0), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(s.photon[i] == doctest::Approx(std::pow(std::cos(0.1 * grid[i]), 2)).epsilon(1e-12));
        CHECK(s.rho_1p1p[i] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("small bath agrees with dense diagonalization") {
    const SystemParams p{1.0, 1.0, 0.1, 1};
    const DiscretizedBath bath = discretize({0.02, 5.0}, {0.01, 8.0}, 0.05, 2.0);
    const auto m = static_cast<Eigen::Index>(bath.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m + 2, m + 2);
    h(0, 0) = 1.0;
    h(1, 1) = 1.0;
    h(0, 1) = h(1, 0) = 0.1;
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& mode = bath.modes[static_cast<std::size_t>(i)];
        h(i + 2, i + 2) = mode.omega;
        h(0, i + 2) = h(i + 2, 0) = mode.kappa;
        h(1, i + 2) = h(i + 2, 1) = mode.xi;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const auto grid = uniform_grid(80.0, 4.0);
    const ExactSeries s = exact_evolve(p, bath, SingleExcitationState::system(0.6, 0.8, bath.size()), grid);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(m + 2);
    psi0(0) = 0.6;
    psi0(1) = 0.8;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Eigen::VectorXcd phase = (cd(0, -grid[k]) * es.eigenvalues().cast<cd>()).array().exp();
        const Eigen::VectorXcd psi =
            es.eigenvectors().cast<cd>() * (phase.asDiagonal() * (es.eigenvectors().transpose().cast<cd>() * psi0));
        CHECK(std::abs(s.photon[k] - std::norm(psi(0))) < 1e-10);
        CHECK(std::abs(s.excited[k] - std::norm(psi(1))) < 1e-10);
        CHECK(std::abs(s.rho_1p1p[k] - 0.5 * std::norm(psi(0) + psi(1))) < 1e-10);
    }
    CHECK(s.max_norm_defect < 1e-10);
}

TEST_CASE("exact dynamics shows the bright/dark rate contrast") {
    const SystemParams p{1.0, 1.0, 0.1, 1};
    const DiscretizedBath bath = discretize({0.002, 5.0}, {0.001, 8.0}, 5e-4, 4.0);
    const auto grid = uniform_grid(60.0, 1.0);
    const ExactSeries plus = exact_evolve(p, bath, SingleExcitationState::dressed(+1, bath.size()), grid);
    const ExactSeries minus = exact_evolve(p, bath, SingleExcitationState::dressed(-1, bath.size()), grid);
    const double rp = log_slope(grid, plus.rho_1p1p);
    const double rm = log_slope(grid, minus.rho_1m1m);
    CHECK(rp / rm > 10.0);
    CHECK(plus.warnings.empty());
}

TEST_CASE("iteration solution") {
    const DressedBasis b = build_dressed_basis({1.0, 1.0, 0.1, 3});
    const OneExcitationElements e = one_excitation_elements(b, Atom::ground);
    CHECK(e.rho_1p1p == doctest::Approx(0.5));
    CHECK(e.rho_1m1m == doctest::Approx(0.5));
    CHECK(e.rho_1p1m.real() == doctest::Approx(-0.5));
    CHECK(one_excitation_elements(b, Atom::excited).rho_1p1m.real() == doctest::Approx(0.5));

    const RateTensor t = build_rate_tensor(b, {0.002, 5.0}, {0.001, 8.0}, true);
    const auto grid = uniform_grid(200.0, 1.0);
    const IterationSeries it = iteration_solution(t, b.energies(), e, grid);
    CHECK(it.rho_1p1p[0] == doctest::Approx(0.5));
    const Trajectory tr = evolve(DensityMatrix::pure(product_ket(b, 1, Atom::ground)), t, b.energies(), grid);
    double dev = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        dev = std::max({dev, std::abs(it.rho_1p1p[i] - tr.observable("rho_1p1p")[i]),
                        std::abs(it.rho_1m1m[i] - tr.observable("rho_1m1m")[i])});
    }
    CHECK(dev < 1e-3);
    // a purely dressed population decays as a single exponential
    const OneExcitationElements dressed{1.0, 0.0, {0.0, 0.0}};
    const IterationSeries single = iteration_solution(t, b.energies(), dressed, grid);
    const double rate = -t(2, 2, 2, 2).real();
    CHECK(single.rho_1p1p.back() == doctest::Approx(std::exp(-rate * 200.0)).epsilon(1e-10));
}
