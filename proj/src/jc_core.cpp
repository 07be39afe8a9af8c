#include "cbjc/jc_core.hpp"

#include "cbjc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cbjc {

void SystemParams::validate() const {
    if (!(omega_c > 0.0)) throw ConfigurationError("system.omega_c must be > 0");
    if (!(omega_0 > 0.0)) throw ConfigurationError("system.omega_0 must be > 0");
    if (!(lambda >= 0.0)) throw ConfigurationError("system.lambda must be >= 0");
    if (n_max < 1) throw ConfigurationError("system.n_max must be >= 1");
}

bool SystemParams::resonant() const noexcept {
    return std::abs(omega_c - omega_0) <= 1e-12 * std::max(omega_c, omega_0);
}

// --------------------------------- ProductSpace -----------------------------

ProductSpace::ProductSpace(int n_max) : n_max_(n_max) {
    if (n_max < 1) throw ConfigurationError("n_max must be >= 1");
}

std::size_t ProductSpace::index(int photons, Atom atom) const {
    if (atom == Atom::ground) {
        if (photons < 0 || photons > n_max_) {
            throw RangeError("photon number " + std::to_string(photons) + " outside truncation");
        }
        return photons == 0 ? 0 : static_cast<std::size_t>(2 * photons - 1);
    }
    if (photons < 0 || photons > n_max_ - 1) {
        throw RangeError("photon number " + std::to_string(photons) + " outside truncation");
    }
    return static_cast<std::size_t>(2 * photons + 2);
}

std::string ProductSpace::label(std::size_t i) const {
    if (i == 0) return "0;g";
    const auto n = static_cast<int>((i + 1) / 2);  // manifold
    return (i % 2 == 1) ? std::to_string(n) + ";g" : std::to_string(n - 1) + ";e";
}

Eigen::MatrixXd ProductSpace::annihilation() const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
    for (int n = 1; n <= n_max_; ++n) {
        a(index(n - 1, Atom::ground), index(n, Atom::ground)) = std::sqrt(n);
        if (n <= n_max_ - 1) {
            a(index(n - 1, Atom::excited), index(n, Atom::excited)) = std::sqrt(n);
        }
    }
    return a;
}

Eigen::MatrixXd ProductSpace::sigma_minus() const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(d, d);
    for (int n = 0; n <= n_max_ - 1; ++n) {
        s(index(n, Atom::ground), index(n, Atom::excited)) = 1.0;
    }
    return s;
}

Eigen::MatrixXd ProductSpace::exchange() const {
    const Eigen::MatrixXd j = annihilation().transpose() * sigma_minus();
    return j + j.transpose();
}

Eigen::MatrixXd ProductSpace::sigma_z() const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(d, d);
    for (int n = 0; n <= n_max_; ++n) z(index(n, Atom::ground), index(n, Atom::ground)) = -1.0;
    for (int n = 0; n <= n_max_ - 1; ++n) z(index(n, Atom::excited), index(n, Atom::excited)) = 1.0;
    return z;
}

Eigen::MatrixXd ProductSpace::photon_number() const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd num = Eigen::MatrixXd::Zero(d, d);
    for (int n = 0; n <= n_max_; ++n) num(index(n, Atom::ground), index(n, Atom::ground)) = n;
    for (int n = 0; n <= n_max_ - 1; ++n) num(index(n, Atom::excited), index(n, Atom::excited)) = n;
    return num;
}

Eigen::MatrixXd ProductSpace::excited_projector() const {
    return 0.5 * (sigma_z() + Eigen::MatrixXd::Identity(sigma_z().rows(), sigma_z().cols()));
}

Eigen::VectorXd ProductSpace::basis_vector(int photons, Atom atom) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim()));
    v(static_cast<Eigen::Index>(index(photons, atom))) = 1.0;
    return v;
}

Eigen::MatrixXd jc_hamiltonian(const SystemParams& p) {
    p.validate();
    ProductSpace space(p.n_max);
    return p.omega_c * space.photon_number() + 0.5 * p.omega_0 * space.sigma_z() + p.lambda * space.exchange();
}

// --------------------------------- DressedBasis -----------------------------

DressedBasis::DressedBasis(SystemParams params, std::vector<DressedLevel> levels,
                           Eigen::MatrixXd transform)
    : params_(params), space_(params.n_max), levels_(std::move(levels)),
      transform_(std::move(transform)) {
    energies_.resize(static_cast<Eigen::Index>(levels_.size()));
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        energies_(static_cast<Eigen::Index>(i)) = levels_[i].energy;
    }
    op_a_ = transform_.transpose() * space_.annihilation() * transform_;
    op_sm_ = transform_.transpose() * space_.sigma_minus() * transform_;
}

Eigen::MatrixXcd DressedBasis::to_dressed(const Eigen::MatrixXcd& product_op) const {
    const Eigen::MatrixXcd u = transform_.cast<std::complex<double>>();
    return u.adjoint() * product_op * u;
}

Eigen::VectorXcd DressedBasis::ket_to_dressed(const Eigen::VectorXcd& product_ket) const {
    return transform_.transpose().cast<std::complex<double>>() * product_ket;
}

std::size_t DressedBasis::index(int n, int sign) const {
    if (n == 0) return 0;
    if (!coupled()) throw RangeError("uncoupled basis has no dressed pairs");
    if (n < 0 || n > params_.n_max) {
        throw RangeError("manifold " + std::to_string(n) + " outside truncation");
    }
    return static_cast<std::size_t>(2 * n - 1 + (sign > 0 ? 1 : 0));
}

Eigen::VectorXd DressedBasis::dressed_vector(int n, int sign) const {
    if (n == 0) return space_.basis_vector(0, Atom::ground);
    if (n < 0 || n > params_.n_max) {
        throw RangeError("manifold " + std::to_string(n) + " outside truncation");
    }
    const double s = sign > 0 ? 1.0 : -1.0;
    return (s * space_.basis_vector(n, Atom::ground) + space_.basis_vector(n - 1, Atom::excited)) /
           std::sqrt(2.0);
}

std::pair<double, double> dressed_energies(const SystemParams& p, int n) {
    p.validate();
    if (!p.resonant()) {
        throw UnsupportedConfiguration("dressed states are only defined for omega_c == omega_0");
    }
    if (n < 1 || n > p.n_max) {
        throw RangeError("manifold " + std::to_string(n) + " outside 1.." + std::to_string(p.n_max));
    }
    const double centre = (n - 0.5) * p.omega_c;
    const double split = p.lambda * std::sqrt(static_cast<double>(n));
    return {centre + split, centre - split};
}

DressedBasis build_dressed_basis(const SystemParams& p) {
    p.validate();
    if (!p.resonant()) {
        throw UnsupportedConfiguration("dressed states are only defined for omega_c == omega_0");
    }
    ProductSpace space(p.n_max);
    const auto d = static_cast<Eigen::Index>(space.dim());
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(d, d);
    std::vector<DressedLevel> levels;
    levels.reserve(space.dim());

    levels.push_back({"G", 0, 0, -0.5 * p.omega_c});
    u(0, 0) = 1.0;

    const double r = 1.0 / std::sqrt(2.0);
    for (int n = 1; n <= p.n_max; ++n) {
        const auto [e_plus, e_minus] = dressed_energies(p, n);
        const auto ig = static_cast<Eigen::Index>(space.index(n, Atom::ground));
        const auto ie = static_cast<Eigen::Index>(space.index(n - 1, Atom::excited));
        const auto col_minus = static_cast<Eigen::Index>(2 * n - 1);
        const auto col_plus = col_minus + 1;
        if (p.lambda > 0.0) {
            levels.push_back({std::to_string(n) + "-", n, -1, e_minus});
            levels.push_back({std::to_string(n) + "+", n, +1, e_plus});
            u(ig, col_minus) = -r;
            u(ie, col_minus) = r;
            u(ig, col_plus) = r;
            u(ie, col_plus) = r;
        } else {
            levels.push_back({space.label(static_cast<std::size_t>(ig)), n, 0, e_minus});
            levels.push_back({space.label(static_cast<std::size_t>(ie)), n, 0, e_plus});
            u(ig, col_minus) = 1.0;
            u(ie, col_plus) = 1.0;
        }
    }
    return DressedBasis(p, std::move(levels), std::move(u));
}

// ------------------------------ coupled oscillators -------------------------

std::vector<double> OscillatorLevels::energies() const {
    std::vector<double> e;
    e.reserve(levels.size());
    for (const auto& l : levels) e.push_back(l.energy);
    return e;
}

OscillatorLevels coupled_oscillator_levels(double omega, double lambda, int m_max) {
    if (!(lambda < omega)) {
        std::ostringstream os;
        os << "coupled oscillators are unstable for lambda (" << lambda << ") >= omega (" << omega
           << ")";
        throw UnstableConfiguration(os.str());
    }
    if (lambda < 0.0 || m_max < 0) throw ConfigurationError("lambda and m_max must be >= 0");
    OscillatorLevels out;
    for (int m1 = 0; m1 <= m_max; ++m1) {
        for (int m2 = 0; m2 <= m_max; ++m2) {
            out.levels.push_back({m1, m2, m1 * (omega + lambda) + m2 * (omega - lambda)});
        }
    }
    std::stable_sort(out.levels.begin(), out.levels.end(),
                     [](const OscillatorLevel& x, const OscillatorLevel& y) { return x.energy < y.energy; });
    return out;
}

}  // namespace cbjc
