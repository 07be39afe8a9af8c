#include "cbjc/bath.hpp"

#include "cbjc/errors.hpp"

#include <cmath>
#include <numbers>

namespace cbjc {

void SpectralDensity::validate() const {
    if (!(alpha >= 0.0)) throw ConfigurationError("spectral density alpha must be >= 0");
    if (!(omega_cutoff > 0.0)) throw ConfigurationError("spectral density cutoff must be > 0");
}

double SpectralDensity::operator()(double omega) const noexcept {
    if (omega <= 0.0) return 0.0;
    return 2.0 * std::numbers::pi * alpha * omega * std::exp(-omega / omega_cutoff);
}

double ohmic_j(const SpectralDensity& density, double omega) noexcept { return density(omega); }

double DiscretizedBath::recurrence_time() const noexcept {
    return 2.0 * std::numbers::pi / delta_omega;
}

DiscretizedBath discretize(const SpectralDensity& j1, const SpectralDensity& j2,
                           double delta_omega, double omega_max) {
    j1.validate();
    j2.validate();
    if (!(delta_omega > 0.0)) throw ConfigurationError("oracle.delta_omega must be > 0");
    if (!(omega_max > 0.0)) throw ConfigurationError("oracle.omega_max must be > 0");
    if (omega_max < delta_omega) {
        throw ConfigurationError("empty bath grid: omega_max < delta_omega");
    }

    DiscretizedBath bath;
    bath.delta_omega = delta_omega;
    bath.omega_max = omega_max;
    const auto count = static_cast<std::size_t>(std::floor(omega_max / delta_omega));
    bath.modes.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double w = (static_cast<double>(i) + 0.5) * delta_omega;
        bath.modes.push_back({w, std::sqrt(j1(w) * delta_omega / std::numbers::pi),
                              std::sqrt(j2(w) * delta_omega / std::numbers::pi)});
    }
    return bath;
}

}  // namespace cbjc
