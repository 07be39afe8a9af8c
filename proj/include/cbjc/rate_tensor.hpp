// rate_tensor.hpp — common-bath dissipation tensor in the dressed basis.

#pragma once

#include "cbjc/bath.hpp"
#include "cbjc/jc_core.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace cbjc {

// gamma^{cdkl}: contribution of rho_kl to d rho_cd / dt.
//
// Built from the cavity and atom spectral densities evaluated at the dressed
// transition frequencies. With interference disabled every term carrying
// sqrt(J1 J2) is dropped, which is the independent-channel limit.
class RateTensor {
public:
    RateTensor(DressedBasis basis, bool interference, std::vector<std::complex<double>> gamma);

    std::size_t dim() const noexcept { return basis_.size(); }
    const DressedBasis& basis() const noexcept { return basis_; }
    bool interference_enabled() const noexcept { return interference_; }

    std::complex<double> operator()(std::size_t c, std::size_t d, std::size_t k,
                                    std::size_t l) const noexcept {
        const std::size_t n = dim();
        return gamma_[((c * n + d) * n + k) * n + l];
    }

    // max |gamma^{cdkl} - conj(gamma^{dclk})|
    double conjugation_defect() const noexcept;
    // max over (k,l) of |sum_c gamma^{cckl}|
    double trace_defect() const noexcept;

private:
    DressedBasis basis_;
    bool interference_;
    std::vector<std::complex<double>> gamma_;
};

RateTensor build_rate_tensor(const DressedBasis& basis, const SpectralDensity& j1,
                             const SpectralDensity& j2, bool interference);

}  // namespace cbjc
