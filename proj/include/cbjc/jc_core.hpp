// jc_core.hpp — Jaynes-Cummings Hamiltonian, dressed eigenbasis and the
// coupled-oscillator comparison spectrum.

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cbjc {

enum class Atom { ground, excited };

// JC configuration. Frequencies are in units of omega_c in every example,
// but nothing here assumes that.
struct SystemParams {
    double omega_c{1.0};
    double omega_0{1.0};
    double lambda{0.1};
    int n_max{3};

    // Throws ConfigurationError when an invariant is broken.
    void validate() const;
    bool resonant() const noexcept;
};

// Truncated product basis of cavity x atom, grouped by excitation number:
//   |0;g>, |1;g>, |0;e>, |2;g>, |1;e>, ..., |n_max;g>, |n_max-1;e>
// The space is closed under a, sigma-, a^dag a and sigma_z, so the dressed
// transform below is exact within it.
class ProductSpace {
public:
    explicit ProductSpace(int n_max);

    int n_max() const noexcept { return n_max_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(2 * n_max_ + 1); }

    // Index of |photons; atom>. Throws RangeError outside the truncation.
    std::size_t index(int photons, Atom atom) const;
    std::string label(std::size_t index) const;

    Eigen::MatrixXd annihilation() const;   // a
    Eigen::MatrixXd sigma_minus() const;    // |g><e|
    // a^dag sigma- + a sigma+. Formed as J + J^T with J = a^dag sigma- so the
    // product never passes through |n_max;e>, which lies outside the space.
    Eigen::MatrixXd exchange() const;
    Eigen::MatrixXd sigma_z() const;        // |e><e| - |g><g|
    Eigen::MatrixXd photon_number() const;  // a^dag a
    Eigen::MatrixXd excited_projector() const;
    Eigen::VectorXd basis_vector(int photons, Atom atom) const;

private:
    int n_max_;
};

// H_JC = omega_c a^dag a + (omega_0 / 2) sigma_z + lambda (a^dag sigma- + a sigma+)
Eigen::MatrixXd jc_hamiltonian(const SystemParams& params);

struct DressedLevel {
    std::string label;  // "G", "1-", "1+", ...; product labels ("1;g") when lambda = 0
    int manifold{0};    // excitation number n
    int sign{0};        // -1 / +1 for |n,->, |n,+>; 0 for ground and for lambda = 0 levels
    double energy{0.0};
};

// Eigenbasis of H_JC in the fixed order G, (1,-), (1,+), (2,-), (2,+), ...
//
// Dressed vectors follow |n,+-> = (+-|n;g> + |n-1;e>)/sqrt(2). For lambda = 0
// the basis is the product basis itself, ordered as in ProductSpace.
// All members are immutable after construction.
class DressedBasis {
public:
    DressedBasis(SystemParams params, std::vector<DressedLevel> levels, Eigen::MatrixXd transform);

    const SystemParams& params() const noexcept { return params_; }
    const ProductSpace& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return levels_.size(); }
    const std::vector<DressedLevel>& levels() const noexcept { return levels_; }
    const Eigen::VectorXd& energies() const noexcept { return energies_; }

    // Column j holds the product-basis coefficients of level j.
    const Eigen::MatrixXd& transform() const noexcept { return transform_; }

    // <alpha|a|beta> and <alpha|sigma-|beta> in the dressed basis.
    const Eigen::MatrixXd& op_a() const noexcept { return op_a_; }
    const Eigen::MatrixXd& op_sm() const noexcept { return op_sm_; }

    // Express a product-basis operator / ket in this basis.
    Eigen::MatrixXcd to_dressed(const Eigen::MatrixXcd& product_op) const;
    Eigen::VectorXcd ket_to_dressed(const Eigen::VectorXcd& product_ket) const;

    bool coupled() const noexcept { return params_.lambda > 0.0; }

    // Index of |n,sign>; n = 0 (sign ignored) is the ground state.
    // Throws RangeError for lambda = 0 (no dressed pairs) or n > n_max.
    std::size_t index(int n, int sign) const;

    // Product-basis coefficients of the resonant dressed vector |n,sign>,
    // independent of the coupling strength. Used to read rho_{1+-,1+-}
    // from any basis, including the uncoupled one.
    Eigen::VectorXd dressed_vector(int n, int sign) const;

private:
    SystemParams params_;
    ProductSpace space_;
    std::vector<DressedLevel> levels_;
    Eigen::VectorXd energies_;
    Eigen::MatrixXd transform_;
    Eigen::MatrixXd op_a_;
    Eigen::MatrixXd op_sm_;
};

// E_n^{+-} = (n - 1/2) omega_c +- lambda sqrt(n). Resonant configurations only.
std::pair<double, double> dressed_energies(const SystemParams& params, int n);

DressedBasis build_dressed_basis(const SystemParams& params);

struct OscillatorLevel {
    int m1{0};  // quanta in the (omega + lambda) normal mode
    int m2{0};  // quanta in the (omega - lambda) normal mode
    double energy{0.0};
};

struct OscillatorLevels {
    std::vector<OscillatorLevel> levels;  // ascending energy

    std::vector<double> energies() const;
};

// Spectrum of two resonant oscillators coupled by lambda (a^dag b + b^dag a),
// E = m1 (omega + lambda) + m2 (omega - lambda), 0 <= m1, m2 <= m_max.
OscillatorLevels coupled_oscillator_levels(double omega, double lambda, int m_max);

}  // namespace cbjc
