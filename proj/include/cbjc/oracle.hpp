// oracle.hpp — independent checks of the master equation:
//   * exact single-excitation evolution with an explicitly discretized bath,
//   * the closed-form first-iteration solution for rho_{1+,1+}, rho_{1-,1-}.

#pragma once

#include "cbjc/bath.hpp"
#include "cbjc/jc_core.hpp"
#include "cbjc/rate_tensor.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace cbjc {

// Amplitudes on |1;g>|0>, |0;e>|0> and |0;g>|1_i>.
struct SingleExcitationState {
    std::complex<double> cavity{0.0, 0.0};
    std::complex<double> atom{0.0, 0.0};
    std::vector<std::complex<double>> bath;

    double norm_squared() const noexcept;

    // Empty bath, system amplitudes normalized. Throws UndefinedState for a zero vector.
    static SingleExcitationState system(std::complex<double> cavity, std::complex<double> atom,
                                        std::size_t bath_modes);
    // |n=1, sign> = (sign |1;g> + |0;e>) / sqrt(2)
    static SingleExcitationState dressed(int sign, std::size_t bath_modes);
};

struct ExactSeries {
    std::vector<double> times;
    std::vector<double> photon;    // |c_cav|^2
    std::vector<double> excited;   // |c_atom|^2
    std::vector<double> rho_1p1p;  // |<1,+|psi>|^2
    std::vector<double> rho_1m1m;
    double max_norm_defect{0.0};
    std::vector<std::string> warnings;
};

// Chebyshev propagation of the bordered-diagonal single-excitation Hamiltonian;
// each step costs O(M) per polynomial term.
ExactSeries exact_evolve(const SystemParams& params, const DiscretizedBath& bath,
                         const SingleExcitationState& psi0, std::span<const double> t_grid);

struct OneExcitationElements {
    double rho_1p1p{0.0};
    double rho_1m1m{0.0};
    std::complex<double> rho_1p1m{0.0, 0.0};  // rho_{1-,1+} is its conjugate
};

struct IterationSeries {
    std::vector<double> times;
    std::vector<double> rho_1p1p;
    std::vector<double> rho_1m1m;
};

// Coherences propagated without population feedback, then substituted into
// the population equations and integrated in closed form.
IterationSeries iteration_solution(const RateTensor& tensor, const Eigen::VectorXd& energies,
                                   const OneExcitationElements& rho0, std::span<const double> t_grid);

// One-excitation elements of the product state |1;g> or |0;e> in the dressed basis.
OneExcitationElements one_excitation_elements(const DressedBasis& basis, Atom atom);

}  // namespace cbjc
