#include "cbjc/density.hpp"

#include "cbjc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cbjc {

using cd = std::complex<double>;

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd rho, double positivity_tol) {
    if (rho.rows() == 0 || rho.rows() != rho.cols()) {
        throw InvalidDensityMatrix("density matrix must be square and non-empty");
    }
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermiticityTolerance) {
        std::ostringstream os;
        os << "density matrix is not Hermitian (defect " << herm << ")";
        throw InvalidDensityMatrix(os.str());
    }
    const double trace_err = std::abs(rho.trace() - cd{1.0, 0.0});
    if (trace_err > kHermiticityTolerance) {
        std::ostringstream os;
        os << "density matrix trace differs from 1 by " << trace_err;
        throw InvalidDensityMatrix(os.str());
    }
    DensityMatrix out(std::move(rho));
    const double lowest = out.min_eigenvalue();
    if (lowest < -positivity_tol) {
        std::ostringstream os;
        os << "density matrix has eigenvalue " << lowest << " below -" << positivity_tol;
        throw InvalidDensityMatrix(os.str());
    }
    return out;
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& ket) {
    const double norm = ket.norm();
    if (!(norm > 0.0)) throw InvalidDensityMatrix("cannot build a state from a zero ket");
    const Eigen::VectorXcd v = ket / norm;
    return DensityMatrix(v * v.adjoint());
}

double DensityMatrix::expectation(const Eigen::MatrixXcd& op) const {
    return (op * rho_).trace().real();
}

double DensityMatrix::min_eigenvalue() const {
    const Eigen::MatrixXcd h = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

ObservableSet standard_observables(const DressedBasis& basis) {
    const ProductSpace& space = basis.space();
    ObservableSet set;
    set.add("photon", basis.to_dressed(space.photon_number().cast<cd>()));
    set.add("excited", basis.to_dressed(space.excited_projector().cast<cd>()));
    for (int sign : {+1, -1}) {
        const Eigen::VectorXcd v = basis.ket_to_dressed(basis.dressed_vector(1, sign).cast<cd>());
        set.add(sign > 0 ? "rho_1p1p" : "rho_1m1m", v * v.adjoint());
    }
    return set;
}

const std::vector<double>& Trajectory::observable(const std::string& name) const {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw RangeError("unknown observable '" + name + "'");
    return series[static_cast<std::size_t>(it - names.begin())];
}

DensityMatrix Trajectory::state(std::size_t i) const {
    return DensityMatrix::from_matrix(states.at(i), std::numeric_limits<double>::infinity());
}

double Trajectory::max_trace_drift() const {
    double worst = 0.0;
    for (const auto& s : states) worst = std::max(worst, std::abs(s.trace() - cd{1.0, 0.0}));
    return worst;
}

double Trajectory::max_hermiticity_defect() const {
    double worst = 0.0;
    for (const auto& s : states) worst = std::max(worst, (s - s.adjoint()).cwiseAbs().maxCoeff());
    return worst;
}

Eigen::VectorXcd product_ket(const DressedBasis& basis, int photons, Atom atom) {
    return basis.ket_to_dressed(basis.space().basis_vector(photons, atom).cast<cd>());
}

Eigen::VectorXcd dressed_ket(const DressedBasis& basis, int n, int sign) {
    return basis.ket_to_dressed(basis.dressed_vector(n, sign).cast<cd>());
}

}  // namespace cbjc
