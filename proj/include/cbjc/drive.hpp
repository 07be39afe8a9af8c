// drive.hpp — weakly driven cavity: rotating-frame Hamiltonian, steady-state
// transmission spectrum and peak metrics.

#pragma once

#include "cbjc/bath.hpp"
#include "cbjc/jc_core.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cbjc {

struct DriveParams {
    double eta{0.005};
    double omega_d{1.0};

    double cavity_detuning(const SystemParams& p) const noexcept { return p.omega_c - omega_d; }
    double atom_detuning(const SystemParams& p) const noexcept { return p.omega_0 - omega_d; }
    // Advisory only: the steady-state treatment assumes eta << lambda.
    bool weak(const SystemParams& p) const noexcept { return eta < 0.1 * p.lambda; }
};

// D1 a^dag a + (D2/2) sigma_z + lambda (a^dag sigma- + a sigma+) + eta (a^dag + a),
// expressed in the dressed basis of the undriven H_JC.
Eigen::MatrixXcd rotating_frame_hamiltonian(const SystemParams& params, const DriveParams& drive);

struct SpectrumResult {
    std::vector<double> omega_d;
    std::vector<double> photon;
    // Splits the peaks into a lower and an upper group; NaN means the middle
    // of the grid. transmission_spectrum sets it to omega_c.
    double centre{std::numeric_limits<double>::quiet_NaN()};
    std::vector<std::string> warnings;  // skipped points and advisories
};

struct PeakMetrics {
    std::vector<double> positions;  // ascending
    std::vector<double> heights;
    // Tallest peak below the centre over tallest peak above it; absent when
    // one side has no peak.
    std::optional<double> asymmetry_ratio;
};

struct SpectrumOptions {
    std::size_t threads{0};  // 0 selects hardware concurrency
};

// Steady-state <a^dag a> over the drive-frequency grid. The rate tensor is
// built once from lab-frame transition frequencies; each point is solved
// independently. Points whose solve fails are skipped with a warning.
SpectrumResult transmission_spectrum(const SystemParams& params, const SpectralDensity& j1,
                                     const SpectralDensity& j2, double eta,
                                     std::span<const double> omega_d_grid, bool interference,
                                     const SpectrumOptions& options = {});

// Interior local maxima (three-point test) refined by a parabola through the
// neighbouring samples. Throws NoPeakError when there are none.
PeakMetrics peak_metrics(const SpectrumResult& result);

std::vector<double> linear_grid(double lo, double hi, std::size_t points);

}  // namespace cbjc
