// bath.hpp — Ohmic spectral densities and their discretization into modes.

#pragma once

#include <vector>

namespace cbjc {

// J(w) = 2 pi alpha w exp(-w / omega_cutoff) for w > 0, zero otherwise.
struct SpectralDensity {
    double alpha{0.0};
    double omega_cutoff{1.0};

    void validate() const;
    double operator()(double omega) const noexcept;
};

double ohmic_j(const SpectralDensity& density, double omega) noexcept;

struct BathMode {
    double omega{0.0};
    double kappa{0.0};  // coupling to the cavity
    double xi{0.0};     // coupling to the atom
};

struct DiscretizedBath {
    std::vector<BathMode> modes;
    double delta_omega{0.0};
    double omega_max{0.0};

    std::size_t size() const noexcept { return modes.size(); }
    // Time after which the equally spaced grid rephases.
    double recurrence_time() const noexcept;
};

// Midpoint grid omega_i = (i + 1/2) delta_omega < omega_max with
// kappa_i = sqrt(J1(omega_i) delta_omega / pi), xi_i = sqrt(J2(omega_i) delta_omega / pi).
DiscretizedBath discretize(const SpectralDensity& j1, const SpectralDensity& j2,
                           double delta_omega, double omega_max);

}  // namespace cbjc
