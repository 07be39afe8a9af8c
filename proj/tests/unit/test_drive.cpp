#include "support.hpp"

#include "cbjc/drive.hpp"
#include "cbjc/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace cbjc;
using testing::cd;

namespace {
const SpectralDensity kJ1{0.002, 5.0}, kJ2{0.001, 8.0};

double photon_at(const SystemParams& p, double eta, double w, bool interference) {
    const std::vector<double> grid{w};
    return transmission_spectrum(p, kJ1, kJ2, eta, grid, interference).photon.at(0);
}
}  // namespace

TEST_CASE("rotating-frame Hamiltonian") {
    const SystemParams p{1.0, 1.0, 0.1, 3};
    const DriveParams d{0.005, 0.93};
    const ProductSpace s(p.n_max);
    const Eigen::MatrixXd a = s.annihilation();
    // exchange coupling: the off-diagonal part of the reference H at lambda = 1
    Eigen::MatrixXd exchange = testing::reference_hamiltonian({1.0, 1.0, 1.0, 3});
    exchange.diagonal().setZero();
    const Eigen::MatrixXd h = (1.0 - 0.93) * s.photon_number() + 0.5 * (1.0 - 0.93) * s.sigma_z() +
                              0.1 * exchange + 0.005 * (a + a.transpose());
    const DressedBasis b = build_dressed_basis(p);
    const Eigen::MatrixXd ref = b.transform().transpose() * h * b.transform();
    const Eigen::MatrixXcd got = rotating_frame_hamiltonian(p, d);
    CHECK((got - ref.cast<cd>()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((got - got.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(d.cavity_detuning(p) == doctest::Approx(0.07));
    CHECK(d.weak(p));
    CHECK_FALSE((DriveParams{0.02, 1.0}.weak(p)));
}

TEST_CASE("off-peak response scales as eta squared") {
    const SystemParams p{1.0, 1.0, 0.1, 3};
    // outside the doublet; the dip at omega_c is avoided because its linear
    // response is so small that higher orders in eta take over early
    for (double w : {0.85, 1.15}) {
        for (bool interference : {true, false}) {
            const double lo = photon_at(p, 1e-3, w, interference);
            const double hi = photon_at(p, 2e-3, w, interference);
            const double exponent = std::log(hi / lo) / std::log(2.0);
            CHECK(exponent == doctest::Approx(2.0).epsilon(0.05));
        }
    }
}

TEST_CASE("vacuum Rabi peaks sit at omega_c -+ lambda") {
    for (double lambda : {0.05, 0.1, 0.2}) {
        const SystemParams p{1.0, 1.0, lambda, 3};
        const auto grid = linear_grid(1.0 - 2.0 * lambda, 1.0 + 2.0 * lambda, 201);
        const double step = grid[1] - grid[0];
        const PeakMetrics m = peak_metrics(transmission_spectrum(p, kJ1, kJ2, 0.1 * lambda * 0.5, grid, false));
        REQUIRE(m.positions.size() >= 2);
        CHECK(std::abs(m.positions.front() - (1.0 - lambda)) <= step);
        CHECK(std::abs(m.positions.back() - (1.0 + lambda)) <= step);
    }
}

TEST_CASE("spectrum input validation and advisories") {
    const SystemParams p{1.0, 1.0, 0.1, 3};
    const std::vector<double> outside{0.5, 2.5}, unsorted{1.0, 0.9}, ok{0.95, 1.0};
    CHECK_THROWS_AS(transmission_spectrum(p, kJ1, kJ2, 0.005, outside, true), ConfigurationError);
    CHECK_THROWS_AS(transmission_spectrum(p, kJ1, kJ2, 0.005, unsorted, true), ConfigurationError);
    const SpectrumResult strong = transmission_spectrum(p, kJ1, kJ2, 0.05, ok, true);
    bool advisory = false;
    for (const auto& w : strong.warnings) advisory |= w.find("not weak") != std::string::npos;
    CHECK(advisory);
    CHECK(strong.centre == 1.0);
}

TEST_CASE("peak metrics on synthetic data") {
    SpectrumResult r;
    for (int i = 0; i <= 40; ++i) {
        const double x = 0.8 + 0.01 * i;
        r.omega_d.push_back(x);
        // Lorentzians at 0.903 (height ~3) and 1.097 (height ~1)
        r.photon.push_back(3e-4 / (std::pow(x - 0.903, 2) + 1e-4) + 1e-4 / (std::pow(x - 1.097, 2) + 1e-4));
    }
    r.centre = 1.0;
    const PeakMetrics m = peak_metrics(r);
    REQUIRE(m.positions.size() == 2);
    CHECK(m.positions[0] == doctest::Approx(0.903).epsilon(2e-3));
    CHECK(m.positions[1] == doctest::Approx(1.097).epsilon(2e-3));
    REQUIRE(m.asymmetry_ratio.has_value());
    CHECK(*m.asymmetry_ratio == doctest::Approx(3.0).epsilon(0.1));

    SpectrumResult flat;
    flat.omega_d = {0.9, 1.0, 1.1};
    flat.photon = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(peak_metrics(flat), NoPeakError);
    CHECK(linear_grid(0.8, 1.2, 401).size() == 401);
}
