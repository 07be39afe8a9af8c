// support.hpp — shared helpers for the test binaries: a seeded parameter
// generator and test-side reference constructions that do not go through the
// library's own assembly code.

#pragma once

#include "cbjc/bath.hpp"
#include "cbjc/jc_core.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace testing {

using cd = std::complex<double>;

// Ohmic density evaluated from its closed form, independent of bath.cpp.
inline double ohmic(double alpha, double cutoff, double w) {
    return w > 0.0 ? 2.0 * std::numbers::pi * alpha * w * std::exp(-w / cutoff) : 0.0;
}

struct RandomCase {
    cbjc::SystemParams params;
    cbjc::SpectralDensity j1;
    cbjc::SpectralDensity j2;
};

// Resonant parameter sets in the weak-coupling regime.
class CaseGenerator {
public:
    explicit CaseGenerator(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    RandomCase next() {
        RandomCase c;
        const double w = uniform(0.6, 1.6);
        c.params = {w, w, uniform(0.02, 0.3), integer(1, 4)};
        c.j1 = {uniform(1e-4, 4e-3), uniform(2.0, 10.0)};
        c.j2 = {uniform(0.0, 3e-3), uniform(2.0, 10.0)};
        return c;
    }

private:
    std::mt19937_64 rng_;
};

// Row-major vectorization: vec(A rho B) = (A (x) B^T) vec(rho).
inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// -i[H, .] + sum_k L[Q_k] as an explicit superoperator.
inline Eigen::MatrixXcd lindblad_superop(const Eigen::MatrixXcd& h, const std::vector<Eigen::MatrixXcd>& jumps) {
    const Eigen::Index n = h.rows();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd l = cd(0, -1) * (kron(h, id) - kron(id, h.transpose()));
    for (const auto& q : jumps) {
        const Eigen::MatrixXcd qq = q.adjoint() * q;
        l += 2.0 * kron(q, q.conjugate()) - kron(qq, id) - kron(id, qq.transpose());
    }
    return l;
}

// Product-basis JC Hamiltonian written out element by element.
inline Eigen::MatrixXd reference_hamiltonian(const cbjc::SystemParams& p) {
    const int n = 2 * p.n_max + 1;
    auto idx = [](int photons, bool excited) { return excited ? 2 * photons + 2 : (photons == 0 ? 0 : 2 * photons - 1); };
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int m = 0; m <= p.n_max; ++m) h(idx(m, false), idx(m, false)) = p.omega_c * m - 0.5 * p.omega_0;
    for (int m = 0; m < p.n_max; ++m) {
        h(idx(m, true), idx(m, true)) = p.omega_c * m + 0.5 * p.omega_0;
        h(idx(m + 1, false), idx(m, true)) = h(idx(m, true), idx(m + 1, false)) = p.lambda * std::sqrt(m + 1.0);
    }
    return h;
}

}  // namespace testing
