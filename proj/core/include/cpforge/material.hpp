#pragma once

#include <complex>
#include <vector>

namespace cpforge {

// Single Drude-Lorentz resonance.  Frequencies in rad/s.
struct Resonance {
    double plasma;      // omega_P > 0
    double transverse;  // omega_T > 0
    double damping;     // gamma >= 0

    Resonance(double plasma_frequency, double transverse_frequency,
              double damping_rate);
};

struct StaticResponse {
    double chi_e;      // eps(0) - 1
    double chi_m;      // mu(0) - 1
    double impedance;  // sqrt(mu(0)/eps(0))
};

// Multi-resonance Drude-Lorentz magnetodielectric.  Immutable; every
// evaluation is a pure function of (resonances, frequency).
class Material {
public:
    Material() = default;  // vacuum
    Material(std::vector<Resonance> electric, std::vector<Resonance> magnetic);

    // response at imaginary frequency omega = iu, u >= 0.  Real, >= 1,
    // strictly decreasing in u.
    double permittivity_iu(double u) const;
    double permeability_iu(double u) const;

    // analytic continuation of the Drude-Lorentz form; agrees with the
    // _iu evaluators on the positive imaginary axis.
    std::complex<double> permittivity(std::complex<double> omega) const;
    std::complex<double> permeability(std::complex<double> omega) const;

    StaticResponse statics() const;

    bool vacuum() const { return electric_.empty() && magnetic_.empty(); }
    bool nonmagnetic() const { return magnetic_.empty(); }

    // lowest / highest transverse resonance over both response channels
    // (omega_M-+ of the asymptotic analysis).  Zero for vacuum.
    double min_resonance() const;
    double max_resonance() const;

    const std::vector<Resonance>& electric() const { return electric_; }
    const std::vector<Resonance>& magnetic() const { return magnetic_; }

private:
    std::vector<Resonance> electric_;
    std::vector<Resonance> magnetic_;
};

}  // namespace cpforge
