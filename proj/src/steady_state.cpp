#include "cbjc/steady_state.hpp"

#include "cbjc/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cbjc {

using cd = std::complex<double>;

std::size_t kernel_dimension(const Generator& generator, double rel_tol) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(generator.matrix());
    qr.setThreshold(rel_tol);
    return static_cast<std::size_t>(qr.dimensionOfKernel());
}

DensityMatrix steady_state(const Generator& generator, const SteadyStateOptions& options) {
    const std::size_t kdim = kernel_dimension(generator, options.kernel_tol);
    if (kdim != 1) throw DegenerateSteadyState(kdim);

    const auto n = static_cast<Eigen::Index>(generator.dim());
    Eigen::MatrixXcd system = generator.matrix();
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n * n);
    system.row(0).setZero();
    for (Eigen::Index c = 0; c < n; ++c) system(0, c * n + c) = 1.0;
    rhs(0) = 1.0;

    const Eigen::VectorXcd v = system.fullPivLu().solve(rhs);
    const double residual = (generator.matrix() * v).cwiseAbs().maxCoeff();
    if (!(residual < options.residual_tol)) {
        std::ostringstream os;
        os << "steady-state residual " << residual << " exceeds " << options.residual_tol;
        throw SolverError(os.str());
    }
    Eigen::MatrixXcd rho = unvectorize(v, generator.dim());
    // Remove the antihermitian roundoff left by the solve.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix::from_matrix(std::move(rho), std::numeric_limits<double>::infinity());
}

Eigen::VectorXcd DarkState::ket(const ProductSpace& space) const {
    return (excited_amplitude * space.basis_vector(0, Atom::excited) +
            photon_amplitude * space.basis_vector(1, Atom::ground))
        .cast<cd>();
}

DarkState dark_state(double j1_value, double j2_value) {
    if (j1_value < 0.0 || j2_value < 0.0) throw ConfigurationError("decay rates must be >= 0");
    const double total = j1_value + j2_value;
    if (!(total > 0.0)) throw UndefinedState("dark state is undefined when both rates vanish");
    const double norm = std::sqrt(total);
    return {std::sqrt(j1_value) / norm, -std::sqrt(j2_value) / norm};
}

SteadyExpectations steady_expectations_analytic(double j1_value, double j2_value, InitialArm initial) {
    const double total = j1_value + j2_value;
    if (!(total > 0.0) || j1_value < 0.0 || j2_value < 0.0) {
        throw ConfigurationError("steady expectations need non-negative rates with J1 + J2 > 0");
    }
    const double s2 = total * total;
    if (initial == InitialArm::cavity) {
        return {j2_value * j2_value / s2, j1_value * j2_value / s2};
    }
    return {j1_value * j2_value / s2, j1_value * j1_value / s2};
}

}  // namespace cbjc
