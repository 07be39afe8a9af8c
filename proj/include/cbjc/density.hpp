// density.hpp — validated density matrices, observables and trajectories.

#pragma once

#include "cbjc/jc_core.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cbjc {

// Eigenvalues below -kPositivityTolerance are rejected; smaller negative
// values are accepted as integration noise of non-Lindblad generators.
inline constexpr double kPositivityTolerance = 1e-8;
inline constexpr double kHermiticityTolerance = 1e-10;

class DensityMatrix {
public:
    // Validates Hermiticity, unit trace and positivity; throws InvalidDensityMatrix.
    static DensityMatrix from_matrix(Eigen::MatrixXcd rho, double positivity_tol = kPositivityTolerance);
    // |psi><psi| of a normalized (or normalizable) ket.
    static DensityMatrix pure(const Eigen::VectorXcd& ket);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return rho_; }
    std::complex<double> operator()(std::size_t c, std::size_t d) const {
        return rho_(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(d));
    }

    // Re tr(O rho)
    double expectation(const Eigen::MatrixXcd& op) const;
    double min_eigenvalue() const;

private:
    explicit DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {}
    Eigen::MatrixXcd rho_;
};

// Named operators recorded along a trajectory.
struct ObservableSet {
    std::vector<std::pair<std::string, Eigen::MatrixXcd>> operators;

    void add(std::string name, Eigen::MatrixXcd op) { operators.emplace_back(std::move(name), std::move(op)); }
};

// photon (a^dag a), excited (|e><e|), rho_1p1p and rho_1m1m, all expressed in
// the given basis. The dressed projectors use the resonant |1,+-> vectors so
// they are defined for the uncoupled basis too.
ObservableSet standard_observables(const DressedBasis& basis);

class Trajectory {
public:
    std::vector<double> times;
    std::vector<Eigen::MatrixXcd> states;
    std::vector<std::string> names;
    std::vector<std::vector<double>> series;
    // Positivity violations beyond kPositivityTolerance (first one reported).
    std::vector<std::string> diagnostics;
    std::size_t positivity_violations{0};

    std::size_t size() const noexcept { return times.size(); }
    // Throws RangeError for an unknown observable.
    const std::vector<double>& observable(const std::string& name) const;
    // Hermiticity and trace are checked; positivity is reported through diagnostics.
    DensityMatrix state(std::size_t i) const;

    double max_trace_drift() const;
    double max_hermiticity_defect() const;
};

// Product-basis ket helpers in the basis of `basis`.
Eigen::VectorXcd product_ket(const DressedBasis& basis, int photons, Atom atom);
Eigen::VectorXcd dressed_ket(const DressedBasis& basis, int n, int sign);

}  // namespace cbjc
