#include "cpforge/material.hpp"

#include <cmath>
#include <stdexcept>

namespace cpforge {

namespace {

double sum_iu(const std::vector<Resonance>& resonances, double u) {
    if (u < 0.0) throw std::invalid_argument("imaginary frequency u must be >= 0");
    double chi = 0.0;
    for (const auto& r : resonances) {
        chi += r.plasma * r.plasma /
               (r.transverse * r.transverse + u * u + u * r.damping);
    }
    return 1.0 + chi;
}

std::complex<double> sum_complex(const std::vector<Resonance>& resonances,
                                 std::complex<double> w) {
    std::complex<double> chi = 0.0;
    for (const auto& r : resonances) {
        const std::complex<double> den =
            r.transverse * r.transverse - w * w -
            std::complex<double>(0.0, 1.0) * w * r.damping;
        if (den == 0.0)
            throw std::domain_error(
                "Drude-Lorentz pole: undamped resonance evaluated at |omega| = omega_T");
        chi += r.plasma * r.plasma / den;
    }
    return 1.0 + chi;
}

}  // namespace

Resonance::Resonance(double plasma_frequency, double transverse_frequency,
                     double damping_rate)
    : plasma(plasma_frequency),
      transverse(transverse_frequency),
      damping(damping_rate) {
    if (!(plasma > 0.0)) throw std::invalid_argument("plasma frequency must be > 0");
    if (!(transverse > 0.0))
        throw std::invalid_argument("transverse frequency must be > 0");
    if (!(damping >= 0.0)) throw std::invalid_argument("damping must be >= 0");
}

Material::Material(std::vector<Resonance> electric,
                   std::vector<Resonance> magnetic)
    : electric_(std::move(electric)), magnetic_(std::move(magnetic)) {}

double Material::permittivity_iu(double u) const { return sum_iu(electric_, u); }

double Material::permeability_iu(double u) const { return sum_iu(magnetic_, u); }

std::complex<double> Material::permittivity(std::complex<double> omega) const {
    return sum_complex(electric_, omega);
}

std::complex<double> Material::permeability(std::complex<double> omega) const {
    return sum_complex(magnetic_, omega);
}

StaticResponse Material::statics() const {
    const double eps0 = permittivity_iu(0.0);
    const double mu0 = permeability_iu(0.0);
    return {eps0 - 1.0, mu0 - 1.0, std::sqrt(mu0 / eps0)};
}

double Material::min_resonance() const {
    double m = 0.0;
    bool seen = false;
    for (const auto* list : {&electric_, &magnetic_})
        for (const auto& r : *list) {
            if (!seen || r.transverse < m) m = r.transverse;
            seen = true;
        }
    return m;
}

double Material::max_resonance() const {
    double m = 0.0;
    for (const auto* list : {&electric_, &magnetic_})
        for (const auto& r : *list) m = std::max(m, r.transverse);
    return m;
}

}  // namespace cpforge
