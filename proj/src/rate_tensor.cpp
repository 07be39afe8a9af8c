#include "cbjc/rate_tensor.hpp"

#include <algorithm>
#include <cmath>

namespace cbjc {

RateTensor::RateTensor(DressedBasis basis, bool interference, std::vector<std::complex<double>> gamma)
    : basis_(std::move(basis)), interference_(interference), gamma_(std::move(gamma)) {}

double RateTensor::conjugation_defect() const noexcept {
    const std::size_t n = dim();
    double worst = 0.0;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    worst = std::max(worst, std::abs((*this)(c, d, k, l) - std::conj((*this)(d, c, l, k))));
    return worst;
}

double RateTensor::trace_defect() const noexcept {
    const std::size_t n = dim();
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            std::complex<double> sum{0.0, 0.0};
            for (std::size_t c = 0; c < n; ++c) sum += (*this)(c, c, k, l);
            worst = std::max(worst, std::abs(sum));
        }
    }
    return worst;
}

namespace {

// Spectral weights of one transition frequency.
struct ChannelRates {
    double cavity{0.0};
    double atom{0.0};
    double cross{0.0};  // sqrt(J1 J2), zero when interference is off
};

}  // namespace

RateTensor build_rate_tensor(const DressedBasis& basis, const SpectralDensity& j1,
                             const SpectralDensity& j2, bool interference) {
    j1.validate();
    j2.validate();
    const std::size_t n = basis.size();
    const Eigen::VectorXd& e = basis.energies();
    const Eigen::MatrixXd& a = basis.op_a();
    const Eigen::MatrixXd& s = basis.op_sm();

    // rates(i, j) at omega_ij = E_i - E_j
    std::vector<ChannelRates> rates(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double w = e(static_cast<Eigen::Index>(i)) - e(static_cast<Eigen::Index>(j));
            ChannelRates r{j1(w), j2(w), 0.0};
            if (interference) r.cross = std::sqrt(r.cavity * r.atom);
            rates[i * n + j] = r;
        }
    }
    auto rate = [&](std::size_t i, std::size_t j) -> const ChannelRates& { return rates[i * n + j]; };
    auto el = [](const Eigen::MatrixXd& m, std::size_t i, std::size_t j) {
        return m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    };
    // Operators are real in this basis, so A^dag_{ij} = A_{ji}.
    auto ad = [&](std::size_t i, std::size_t j) { return el(a, j, i); };
    auto sp = [&](std::size_t i, std::size_t j) { return el(s, j, i); };

    // Loss sums of the two "delta" terms,
    //   sum_m [J1 a^dag_im a_mj + J2 s+_im s-_mj + X (a^dag_im s-_mj + s+_im a_mj)],
    // with the spectral weights taken at w_jm (gamma_1) or at w_im (gamma_3).
    std::vector<double> loss_right(n * n, 0.0);
    std::vector<double> loss_left(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double right = 0.0;
            double left = 0.0;
            for (std::size_t m = 0; m < n; ++m) {
                const double aa = ad(i, m) * el(a, m, j);
                const double ss = sp(i, m) * el(s, m, j);
                const double mixed = ad(i, m) * el(s, m, j) + sp(i, m) * el(a, m, j);
                const ChannelRates& rr = rate(j, m);
                const ChannelRates& rl = rate(i, m);
                right += rr.cavity * aa + rr.atom * ss + rr.cross * mixed;
                left += rl.cavity * aa + rl.atom * ss + rl.cross * mixed;
            }
            loss_right[i * n + j] = right;
            loss_left[i * n + j] = left;
        }
    }

    std::vector<std::complex<double>> gamma(n * n * n * n, {0.0, 0.0});
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    double g = 0.0;
                    // gamma_1: -delta_dl sum_n [...](w_kn)
                    if (d == l) g -= loss_right[c * n + k];
                    // gamma_3: -delta_ck sum_n [...](w_ln)
                    if (c == k) g -= loss_left[l * n + d];
                    // gamma_2 at w_kc and gamma_4 at w_ld share the operator products
                    const double aa = el(a, c, k) * ad(l, d);
                    const double ss = el(s, c, k) * sp(l, d);
                    const double mixed = el(a, c, k) * sp(l, d) + el(s, c, k) * ad(l, d);
                    const ChannelRates& r2 = rate(k, c);
                    const ChannelRates& r4 = rate(l, d);
                    g += r2.cavity * aa + r2.atom * ss + r2.cross * mixed;
                    g += r4.cavity * aa + r4.atom * ss + r4.cross * mixed;
                    gamma[((c * n + d) * n + k) * n + l] = {g, 0.0};
                }
            }
        }
    }
    return RateTensor(basis, interference, std::move(gamma));
}

}  // namespace cbjc
