#include "cbjc/generator.hpp"

#include "cbjc/errors.hpp"

#include <cmath>

namespace cbjc {

using cd = std::complex<double>;
using Index = Eigen::Index;

Generator::Generator(Eigen::MatrixXcd superop) : superop_(std::move(superop)) {
    if (superop_.rows() != superop_.cols()) {
        throw ContractViolation("generator must be square");
    }
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(superop_.rows()))));
    if (static_cast<Index>(n * n) != superop_.rows()) {
        throw ContractViolation("generator size is not a perfect square");
    }
    dim_ = n;
}

Generator Generator::zero(std::size_t dim) {
    const auto d2 = static_cast<Index>(dim * dim);
    return Generator(Eigen::MatrixXcd::Zero(d2, d2));
}

Eigen::MatrixXcd Generator::apply(const Eigen::MatrixXcd& rho) const {
    return unvectorize(superop_ * vectorize(rho), dim_);
}

void Generator::add_hamiltonian(const Eigen::MatrixXcd& h) {
    const auto n = static_cast<Index>(dim_);
    const cd i{0.0, 1.0};
    for (Index c = 0; c < n; ++c) {
        for (Index d = 0; d < n; ++d) {
            const Index row = c * n + d;
            for (Index k = 0; k < n; ++k) {
                superop_(row, k * n + d) += -i * h(c, k);  // H rho
                superop_(row, c * n + k) += i * h(k, d);   // rho H
            }
        }
    }
}

void Generator::add_dissipator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double weight) {
    const auto n = static_cast<Index>(dim_);
    const Eigen::MatrixXcd bd_a = b.adjoint() * a;
    for (Index c = 0; c < n; ++c) {
        for (Index d = 0; d < n; ++d) {
            const Index row = c * n + d;
            for (Index k = 0; k < n; ++k) {
                for (Index l = 0; l < n; ++l) {
                    // 2 (A rho B^dag)_cd = 2 A_ck rho_kl conj(B_dl)
                    superop_(row, k * n + l) += 2.0 * weight * a(c, k) * std::conj(b(d, l));
                }
                superop_(row, k * n + d) -= weight * bd_a(c, k);
                superop_(row, c * n + k) -= weight * bd_a(k, d);
            }
        }
    }
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho) {
    const Index n = rho.rows();
    Eigen::VectorXcd v(n * n);
    for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d) v(c * n + d) = rho(c, d);
    return v;
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, std::size_t dim) {
    const auto n = static_cast<Index>(dim);
    Eigen::MatrixXcd rho(n, n);
    for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d) rho(c, d) = v(c * n + d);
    return rho;
}

Generator master_generator(const RateTensor& tensor, const Eigen::VectorXd& energies) {
    const std::size_t n = tensor.dim();
    if (static_cast<std::size_t>(energies.size()) != n) {
        throw ContractViolation("energy vector does not match tensor dimension");
    }
    const auto ni = static_cast<Index>(n);
    Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(ni * ni, ni * ni);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
            const auto row = static_cast<Index>(c * n + d);
            l(row, row) += cd{0.0, -(energies(static_cast<Index>(c)) - energies(static_cast<Index>(d)))};
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) l(row, static_cast<Index>(k * n + m)) += tensor(c, d, k, m);
        }
    }
    return Generator(std::move(l));
}

Generator master_generator(const RateTensor& tensor, const Eigen::MatrixXcd& hamiltonian) {
    const std::size_t n = tensor.dim();
    if (static_cast<std::size_t>(hamiltonian.rows()) != n || hamiltonian.rows() != hamiltonian.cols()) {
        throw ContractViolation("Hamiltonian does not match tensor dimension");
    }
    Generator gen = master_generator(tensor, Eigen::VectorXd(Eigen::VectorXd::Zero(static_cast<Index>(n))));
    gen.add_hamiltonian(hamiltonian);
    return gen;
}

Generator traditional_generator(const DressedBasis& basis, double j1_value, double j2_value) {
    if (j1_value < 0.0 || j2_value < 0.0) throw ConfigurationError("decay rates must be >= 0");
    Generator gen = Generator::zero(basis.size());
    gen.add_hamiltonian(basis.energies().asDiagonal().toDenseMatrix().cast<cd>());
    const Eigen::MatrixXcd a = basis.op_a().cast<cd>();
    const Eigen::MatrixXcd s = basis.op_sm().cast<cd>();
    gen.add_dissipator(a, a, j1_value);
    gen.add_dissipator(s, s, j2_value);
    return gen;
}

LambdaZeroGenerator lambda_zero_generator(const SystemParams& params, double j1_value,
                                          double j2_value) {
    params.validate();
    if (params.lambda != 0.0) {
        throw ContractViolation("collective-jump generator requires lambda = 0");
    }
    if (j1_value < 0.0 || j2_value < 0.0) throw ConfigurationError("decay rates must be >= 0");
    ProductSpace space(params.n_max);
    Eigen::MatrixXcd h0 =
        (params.omega_c * space.photon_number() + 0.5 * params.omega_0 * space.sigma_z()).cast<cd>();
    Eigen::MatrixXcd p =
        (std::sqrt(j1_value) * space.annihilation() + std::sqrt(j2_value) * space.sigma_minus()).cast<cd>();
    Generator gen = Generator::zero(space.dim());
    gen.add_hamiltonian(h0);
    gen.add_dissipator(p, p, 1.0);
    return {std::move(h0), std::move(p), std::move(gen)};
}

}  // namespace cbjc
