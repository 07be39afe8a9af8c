#include "cbjc/oracle.hpp"

#include "cbjc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cbjc {

using cd = std::complex<double>;

double SingleExcitationState::norm_squared() const noexcept {
    double s = std::norm(cavity) + std::norm(atom);
    for (const cd& c : bath) s += std::norm(c);
    return s;
}

SingleExcitationState SingleExcitationState::system(cd cavity, cd atom, std::size_t bath_modes) {
    const double norm = std::sqrt(std::norm(cavity) + std::norm(atom));
    if (!(norm > 0.0)) throw UndefinedState("single-excitation state has zero norm");
    SingleExcitationState s;
    s.cavity = cavity / norm;
    s.atom = atom / norm;
    s.bath.assign(bath_modes, cd{0.0, 0.0});
    return s;
}

SingleExcitationState SingleExcitationState::dressed(int sign, std::size_t bath_modes) {
    return system(cd{sign > 0 ? 1.0 : -1.0, 0.0}, cd{1.0, 0.0}, bath_modes);
}

namespace {

// H = diag(w_c, w_0, w_i) + lambda (|cav><atom| + h.c.) + sum_i kappa_i |cav><i| + xi_i |atom><i| + h.c.
// Energies are measured from |0;g>|vac>. Layout of the state: [cav, atom, bath...].
class BorderedHamiltonian {
public:
    BorderedHamiltonian(const SystemParams& p, const DiscretizedBath& bath)
        : w_cav_(p.omega_c), w_atom_(p.omega_0), lambda_(p.lambda) {
        const std::size_t m = bath.size();
        w_.reserve(m);
        kappa_.reserve(m);
        xi_.reserve(m);
        for (const auto& mode : bath.modes) {
            w_.push_back(mode.omega);
            kappa_.push_back(mode.kappa);
            xi_.push_back(mode.xi);
        }
        // Weyl: spectrum within the diagonal range widened by the norm of the border.
        double kk = 0.0, xx = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            kk += kappa_[i] * kappa_[i];
            xx += xi_[i] * xi_[i];
        }
        const double border = lambda_ + std::sqrt(kk) + std::sqrt(xx);
        double lo = std::min(w_cav_, w_atom_), hi = std::max(w_cav_, w_atom_);
        for (double w : w_) {
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        }
        lo -= border;
        hi += border;
        centre_ = 0.5 * (hi + lo);
        half_width_ = 0.5 * (hi - lo) * 1.01 + 1e-12;
    }

    std::size_t size() const noexcept { return w_.size() + 2; }
    double centre() const noexcept { return centre_; }
    double half_width() const noexcept { return half_width_; }

    // out = (H - centre) / half_width * in
    void apply_scaled(const std::vector<cd>& in, std::vector<cd>& out) const {
        const std::size_t m = w_.size();
        const double inv = 1.0 / half_width_;
        cd sum_k{0.0, 0.0}, sum_x{0.0, 0.0};
        const cd c = in[0], a = in[1];
        for (std::size_t i = 0; i < m; ++i) {
            const cd b = in[i + 2];
            sum_k += kappa_[i] * b;
            sum_x += xi_[i] * b;
            out[i + 2] = ((w_[i] - centre_) * b + kappa_[i] * c + xi_[i] * a) * inv;
        }
        out[0] = ((w_cav_ - centre_) * c + lambda_ * a + sum_k) * inv;
        out[1] = ((w_atom_ - centre_) * a + lambda_ * c + sum_x) * inv;
    }

private:
    double w_cav_, w_atom_, lambda_;
    std::vector<double> w_, kappa_, xi_;
    double centre_{0.0};
    double half_width_{1.0};
};

// psi <- exp(-i H tau) psi via the Chebyshev expansion
//   exp(-i x s) = J_0(s) + 2 sum_k (-i)^k J_k(s) T_k(x),  s = half_width * tau.
void chebyshev_step(const BorderedHamiltonian& h, double tau, std::vector<cd>& psi,
                    std::vector<cd>& prev, std::vector<cd>& cur, std::vector<cd>& next,
                    std::vector<cd>& acc) {
    const double s = h.half_width() * tau;
    const std::size_t n = psi.size();
    const auto k_max = static_cast<int>(std::ceil(s + 10.0 * std::cbrt(s) + 30.0));

    prev = psi;
    const double j0 = std::cyl_bessel_j(0.0, s);
    for (std::size_t i = 0; i < n; ++i) acc[i] = j0 * psi[i];
    h.apply_scaled(psi, cur);
    cd phase{0.0, -1.0};  // (-i)^k
    for (int k = 1; k <= k_max; ++k) {
        const double jk = std::cyl_bessel_j(static_cast<double>(k), s);
        const cd coeff = 2.0 * phase * jk;
        for (std::size_t i = 0; i < n; ++i) acc[i] += coeff * cur[i];
        if (k > s && std::abs(jk) < 1e-18) break;
        h.apply_scaled(cur, next);
        for (std::size_t i = 0; i < n; ++i) next[i] = 2.0 * next[i] - prev[i];
        std::swap(prev, cur);
        std::swap(cur, next);
        phase *= cd{0.0, -1.0};
    }
    const cd global = std::exp(cd{0.0, -h.centre() * tau});
    for (std::size_t i = 0; i < n; ++i) psi[i] = global * acc[i];
}

}  // namespace

ExactSeries exact_evolve(const SystemParams& params, const DiscretizedBath& bath,
                         const SingleExcitationState& psi0, std::span<const double> t_grid) {
    params.validate();
    if (psi0.bath.size() != bath.size()) {
        throw ContractViolation("initial state bath size does not match the discretized bath");
    }
    if (std::abs(psi0.norm_squared() - 1.0) > 1e-12) {
        throw InvalidDensityMatrix("single-excitation initial state is not normalized");
    }
    if (t_grid.empty() || t_grid.front() != 0.0) throw ConfigurationError("time grid must start at 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) throw ConfigurationError("time grid must be increasing");
    }

    const BorderedHamiltonian h(params, bath);
    std::vector<cd> psi(h.size());
    psi[0] = psi0.cavity;
    psi[1] = psi0.atom;
    std::copy(psi0.bath.begin(), psi0.bath.end(), psi.begin() + 2);
    std::vector<cd> prev(h.size()), cur(h.size()), next(h.size()), acc(h.size());

    ExactSeries out;
    if (bath.size() > 0 && t_grid.back() > bath.recurrence_time()) {
        std::ostringstream os;
        os << "t_max = " << t_grid.back() << " exceeds the bath recurrence time " << bath.recurrence_time();
        out.warnings.push_back(os.str());
    }
    const double r = 1.0 / std::sqrt(2.0);
    auto record = [&](double t) {
        double norm = 0.0;
        for (const cd& c : psi) norm += std::norm(c);
        out.max_norm_defect = std::max(out.max_norm_defect, std::abs(norm - 1.0));
        out.times.push_back(t);
        out.photon.push_back(std::norm(psi[0]));
        out.excited.push_back(std::norm(psi[1]));
        out.rho_1p1p.push_back(std::norm(r * (psi[0] + psi[1])));
        out.rho_1m1m.push_back(std::norm(r * (-psi[0] + psi[1])));
    };

    record(0.0);
    // Keep half_width * tau moderate so the expansion stays short and well conditioned.
    constexpr double kMaxPhase = 8.0;
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double span = t_grid[i] - t_grid[i - 1];
        const auto sub = static_cast<int>(std::max(1.0, std::ceil(h.half_width() * span / kMaxPhase)));
        const double tau = span / sub;
        for (int s = 0; s < sub; ++s) chebyshev_step(h, tau, psi, prev, cur, next, acc);
        record(t_grid[i]);
    }
    return out;
}

OneExcitationElements one_excitation_elements(const DressedBasis& basis, Atom atom) {
    const Eigen::VectorXd ket = basis.space().basis_vector(atom == Atom::ground ? 1 : 0, atom);
    const double p = basis.dressed_vector(1, +1).dot(ket);
    const double m = basis.dressed_vector(1, -1).dot(ket);
    return {p * p, m * m, cd{p * m, 0.0}};
}

IterationSeries iteration_solution(const RateTensor& tensor, const Eigen::VectorXd& energies,
                                   const OneExcitationElements& rho0, std::span<const double> t_grid) {
    const DressedBasis& basis = tensor.basis();
    if (!basis.coupled()) throw ContractViolation("iteration solution needs lambda > 0 dressed states");
    const std::size_t p = basis.index(1, +1);
    const std::size_t m = basis.index(1, -1);
    const double w = energies(static_cast<Eigen::Index>(p)) - energies(static_cast<Eigen::Index>(m));
    const cd iw{0.0, w};

    const cd g_pppp = tensor(p, p, p, p);
    const cd g_pppm = tensor(p, p, p, m);
    const cd g_ppmp = tensor(p, p, m, p);
    const cd g_pmpm = tensor(p, m, p, m);
    const cd g_mpmp = tensor(m, p, m, p);
    const cd g_mmmm = tensor(m, m, m, m);
    const cd g_mmpm = tensor(m, m, p, m);
    const cd g_mmmp = tensor(m, m, m, p);

    const cd pm0 = rho0.rho_1p1m;
    const cd mp0 = std::conj(rho0.rho_1p1m);

    // (exp(z t) - 1) / z, finite as z -> 0
    auto ramp = [](cd z, double t) -> cd {
        if (std::abs(z * t) < 1e-8) return t * (1.0 + 0.5 * z * t);
        return (std::exp(z * t) - 1.0) / z;
    };

    IterationSeries out;
    out.times.assign(t_grid.begin(), t_grid.end());
    for (double t : t_grid) {
        const cd plus = (g_pppm * pm0 * ramp(g_pmpm - g_pppp - iw, t) +
                         g_ppmp * mp0 * ramp(g_mpmp - g_pppp + iw, t) + rho0.rho_1p1p) *
                        std::exp(g_pppp * t);
        const cd minus = (g_mmpm * pm0 * ramp(g_pmpm - g_mmmm - iw, t) +
                          g_mmmp * mp0 * ramp(g_mpmp - g_mmmm + iw, t) + rho0.rho_1m1m) *
                         std::exp(g_mmmm * t);
        out.rho_1p1p.push_back(plus.real());
        out.rho_1m1m.push_back(minus.real());
    }
    return out;
}

}  // namespace cbjc
