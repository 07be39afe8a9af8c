// generator.hpp — Liouvillian superoperators acting on row-major vec(rho).

#pragma once

#include "cbjc/jc_core.hpp"
#include "cbjc/rate_tensor.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace cbjc {

// Linear generator d vec(rho)/dt = L vec(rho), with vec(rho)[c * N + d] = rho_cd.
class Generator {
public:
    explicit Generator(Eigen::MatrixXcd superop);

    // Hilbert-space dimension N (the superoperator is N^2 x N^2).
    std::size_t dim() const noexcept { return dim_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return superop_; }

    Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;

    // Accumulators used by the builders below; exposed for custom generators.
    // -i [H, rho]
    void add_hamiltonian(const Eigen::MatrixXcd& h);
    // weight * (2 A rho B^dag - B^dag A rho - rho B^dag A); L[Q] is A = B = Q.
    void add_dissipator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double weight);

    static Generator zero(std::size_t dim);

private:
    std::size_t dim_;
    Eigen::MatrixXcd superop_;
};

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, std::size_t dim);

// d rho_cd/dt = -i (E_c - E_d) rho_cd + sum_kl gamma^{cdkl} rho_kl
Generator master_generator(const RateTensor& tensor, const Eigen::VectorXd& energies);

// d rho_cd/dt = -i <c|[H, rho]|d> + sum_kl gamma^{cdkl} rho_kl, with H given in
// the tensor's basis. Used for the rotating-frame driven problem.
Generator master_generator(const RateTensor& tensor, const Eigen::MatrixXcd& hamiltonian);

// Independent-channel equation J1 L[a] + J2 L[sigma-] with the full H_JC,
// expressed in the dressed basis.
Generator traditional_generator(const DressedBasis& basis, double j1_value, double j2_value);

// Collective-jump form at lambda = 0: -i[H0, rho] + L[P], P = sqrt(J1) a + sqrt(J2) sigma-.
// Operators are in the product basis, which is the lambda = 0 dressed basis.
struct LambdaZeroGenerator {
    Eigen::MatrixXcd h0;
    Eigen::MatrixXcd jump;
    Generator generator;
};

LambdaZeroGenerator lambda_zero_generator(const SystemParams& params, double j1_value,
                                          double j2_value);

}  // namespace cbjc
