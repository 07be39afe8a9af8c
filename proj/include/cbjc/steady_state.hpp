// steady_state.hpp — stationary states of a generator, and the lambda = 0
// quasi-dark state with its closed-form trapping probabilities.

#pragma once

#include "cbjc/density.hpp"
#include "cbjc/generator.hpp"

#include <cstddef>

namespace cbjc {

struct SteadyStateOptions {
    double kernel_tol{1e-9};
    double residual_tol{1e-10};
};

// Kernel rank from a column-pivoted QR; pivots below rel_tol * max pivot count.
std::size_t kernel_dimension(const Generator& generator, double rel_tol = 1e-9);

// Unique trace-one stationary state. Solves L vec(rho) = 0 with the (0,0) row
// replaced by the trace constraint. Throws DegenerateSteadyState when the
// kernel is not one-dimensional, SolverError when the residual is too large.
// Positivity is not enforced; callers compare min_eigenvalue() against
// kPositivityTolerance.
DensityMatrix steady_state(const Generator& generator, const SteadyStateOptions& options = {});

// |D> = (sqrt(J1)|0;e> - sqrt(J2)|1;g>) / sqrt(J1 + J2)
struct DarkState {
    double excited_amplitude{0.0};  // on |0;e>
    double photon_amplitude{0.0};   // on |1;g>

    // Ket in the product basis of `space`.
    Eigen::VectorXcd ket(const ProductSpace& space) const;
};

DarkState dark_state(double j1_value, double j2_value);

enum class InitialArm {
    cavity,  // |1;g>
    atom,    // |0;e>
};

struct SteadyExpectations {
    double photon{0.0};
    double excited{0.0};
};

// Long-time <a^dag a> and <|e><e|> at lambda = 0 for the two one-excitation
// product states.
SteadyExpectations steady_expectations_analytic(double j1_value, double j2_value, InitialArm initial);

}  // namespace cbjc
