#include "cbjc/drive.hpp"

#include "cbjc/errors.hpp"
#include "cbjc/generator.hpp"
#include "cbjc/rate_tensor.hpp"
#include "cbjc/steady_state.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace cbjc {

using cd = std::complex<double>;

Eigen::MatrixXcd rotating_frame_hamiltonian(const SystemParams& params, const DriveParams& drive) {
    const DressedBasis basis = build_dressed_basis(params);
    const ProductSpace& space = basis.space();
    const Eigen::MatrixXd a = space.annihilation();
    const Eigen::MatrixXd h = drive.cavity_detuning(params) * space.photon_number() +
                              0.5 * drive.atom_detuning(params) * space.sigma_z() +
                              params.lambda * space.exchange() +
                              drive.eta * (a.transpose() + a);
    return basis.to_dressed(h.cast<cd>());
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    if (points < 2 || !(hi > lo)) throw ConfigurationError("grid needs hi > lo and at least 2 points");
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i) {
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return g;
}

SpectrumResult transmission_spectrum(const SystemParams& params, const SpectralDensity& j1,
                                     const SpectralDensity& j2, double eta,
                                     std::span<const double> omega_d_grid, bool interference,
                                     const SpectrumOptions& options) {
    params.validate();
    if (!(eta >= 0.0)) throw ConfigurationError("drive.eta must be >= 0");
    if (omega_d_grid.empty()) throw ConfigurationError("drive grid is empty");
    for (std::size_t i = 0; i < omega_d_grid.size(); ++i) {
        const double w = omega_d_grid[i];
        if (!(w > 0.0 && w < 2.0 * params.omega_c)) {
            throw ConfigurationError("drive frequencies must lie in (0, 2 omega_c)");
        }
        if (i > 0 && !(w > omega_d_grid[i - 1])) throw ConfigurationError("drive grid must be increasing");
    }

    const DressedBasis basis = build_dressed_basis(params);
    const RateTensor tensor = build_rate_tensor(basis, j1, j2, interference);
    const Generator dissipative =
        master_generator(tensor, Eigen::VectorXd(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()))));
    const Eigen::MatrixXcd photon_op = basis.to_dressed(basis.space().photon_number().cast<cd>());

    const std::size_t count = omega_d_grid.size();
    std::vector<double> photon(count, 0.0);
    std::vector<std::string> errors(count);
    std::vector<char> ok(count, 0);
    std::vector<double> lowest(count, 0.0);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                Generator gen = dissipative;
                gen.add_hamiltonian(rotating_frame_hamiltonian(params, {eta, omega_d_grid[i]}));
                const DensityMatrix rho = steady_state(gen);
                photon[i] = rho.expectation(photon_op);
                lowest[i] = rho.min_eigenvalue();
                ok[i] = 1;
            } catch (const Error& e) {
                std::ostringstream os;
                os << "omega_d = " << omega_d_grid[i] << " skipped: " << e.what();
                errors[i] = os.str();
            }
        }
    };
    std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    SpectrumResult result;
    result.centre = params.omega_c;
    if (!DriveParams{eta, params.omega_c}.weak(params)) {
        result.warnings.push_back("drive is not weak: eta >= 0.1 lambda");
    }
    std::size_t non_positive = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        if (ok[i] && lowest[i] < -kPositivityTolerance) {
            ++non_positive;
            worst = std::min(worst, lowest[i]);
        }
    }
    if (non_positive > 0) {
        std::ostringstream os;
        os << non_positive << " steady states have eigenvalues below -" << kPositivityTolerance
           << " (lowest " << worst << ")";
        result.warnings.push_back(os.str());
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (ok[i]) {
            result.omega_d.push_back(omega_d_grid[i]);
            result.photon.push_back(photon[i]);
        } else {
            result.warnings.push_back(errors[i]);
        }
    }
    return result;
}

PeakMetrics peak_metrics(const SpectrumResult& result) {
    const auto& x = result.omega_d;
    const auto& y = result.photon;
    struct Peak {
        double position;
        double height;
    };
    std::vector<Peak> peaks;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
        // Vertex of the parabola through the three samples.
        const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
        const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
        const double d01 = (y1 - y0) / (x1 - x0);
        const double d12 = (y2 - y1) / (x2 - x1);
        const double curvature = (d12 - d01) / (x2 - x0);
        Peak p{x1, y1};
        if (curvature < 0.0) {
            const double slope = d01 - curvature * (x0 + x1);  // y = c*x^2 + slope*x + ...
            const double xv = -slope / (2.0 * curvature);
            if (xv > x0 && xv < x2) {
                p.position = xv;
                p.height = y1 + d01 * (xv - x1) + curvature * (xv - x0) * (xv - x1);
            }
        }
        peaks.push_back(p);
    }
    if (peaks.empty()) throw NoPeakError("spectrum has no interior local maximum");

    PeakMetrics m;
    for (const auto& p : peaks) {
        m.positions.push_back(p.position);
        m.heights.push_back(p.height);
    }
    const double centre = std::isnan(result.centre) ? 0.5 * (x.front() + x.back()) : result.centre;
    double lower = -1.0, upper = -1.0;
    for (const auto& p : peaks) {
        double& side = p.position < centre ? lower : upper;
        side = std::max(side, p.height);
    }
    if (lower >= 0.0 && upper > 0.0) m.asymmetry_ratio = lower / upper;
    return m;
}

}  // namespace cbjc
