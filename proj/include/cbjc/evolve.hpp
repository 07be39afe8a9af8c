// evolve.hpp — time propagation of the reduced density matrix.

#pragma once

#include "cbjc/density.hpp"
#include "cbjc/generator.hpp"
#include "cbjc/rate_tensor.hpp"

#include <cstddef>
#include <span>

namespace cbjc {

struct EvolveOptions {
    double rel_tol{1e-9};
    double abs_tol{1e-12};
    double initial_step{1e-2};
    // Steps allowed between two output times before the integrator gives up.
    std::size_t max_steps_between_outputs{1'000'000};
    bool check_positivity{true};
};

// Adaptive Dormand-Prince 5(4) integration of d vec(rho)/dt = L vec(rho),
// sampled on t_grid (increasing, starting at 0). Throws IntegrationError on
// step failure or non-finite state. Negative eigenvalues beyond
// kPositivityTolerance are recorded in Trajectory::diagnostics.
Trajectory evolve(const DensityMatrix& rho0, const Generator& generator,
                  std::span<const double> t_grid, const ObservableSet& observables,
                  const EvolveOptions& options = {});

// Common-bath master equation with the standard observables of the tensor's basis.
Trajectory evolve(const DensityMatrix& rho0, const RateTensor& tensor,
                  const Eigen::VectorXd& energies, std::span<const double> t_grid,
                  const EvolveOptions& options = {});

// Independent-channel equation J1 L[a] + J2 L[sigma-]; rho0 is in the dressed
// basis of params.
Trajectory evolve_traditional(const DensityMatrix& rho0, const SystemParams& params,
                              double j1_value, double j2_value, std::span<const double> t_grid,
                              const EvolveOptions& options = {});

// Uniform grid 0, dt, 2 dt, ... up to and including t_max (t_max = 0 gives {0}).
std::vector<double> uniform_grid(double t_max, double dt);

}  // namespace cbjc
