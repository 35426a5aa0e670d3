#pragma once

#include <complex>
#include <vector>

#include "cpforge/atom.hpp"
#include "cpforge/material.hpp"
#include "cpforge/quadrature.hpp"

namespace cpforge::dynamics {

// Scattering Green tensor of a half space, zz component at coincident
// points, real frequency:
//   G1zz(z, z, w) = (i c^2 / 4 pi w^2) Int_0^inf dq q^3/beta r_p(w,q) e^{2 i beta z}
// with beta the vacuum axial wave number (Im beta >= 0 branch).  Split into
// propagating and evanescent parts for quadrature.
std::complex<double> green_zz(const Material& m, double z, double omega,
                              const quad::Spec& spec, bool* converged = nullptr);

double im_green_zz(const Material& m, double z, double omega,
                   const quad::Spec& spec, bool* converged = nullptr);

// free-space decay rate omega^3 d^2 / (3 pi hbar eps0 c^3)
double free_space_rate(double dipole_sq, double omega);

// Body-modified width of the upper state of the transition (bulk plus
// scattering part of Im G), gated on the shifted frequency.
double level_width(double dipole_sq, const Material& m, double z,
                   double omega_tilde, const quad::Spec& spec,
                   bool* converged = nullptr);

// Body-induced shift contribution of one transition with shifted frequency
// omega_mk (signed; negative for upward transitions seen from the lower
// state): PV integral of the scattering Im G kernel.
double level_shift(double dipole_sq, const Material& m, double z,
                   double omega_mk, const quad::Spec& spec,
                   bool* converged = nullptr);

// Two-level spectrum: shifted transition frequency and widths at one
// position, solved self-consistently by damped fixed-point iteration.
struct Spectrum {
    double omega_tilde = 0.0;   // shifted transition frequency (rad/s)
    double gamma_excited = 0.0; // Gamma_1
    double gamma_ground = 0.0;  // Gamma_0 (zero for a two-level atom)
    int iterations = 0;
    bool converged = true;

    std::complex<double> Omega() const {
        return {omega_tilde, 0.5 * (gamma_excited + gamma_ground)};
    }
};

struct SpectrumOptions {
    bool include_shift = true;
    bool include_width = true;
    double relaxation = 0.5;
    double tol = 1e-10;
    int max_iterations = 200;
};

Spectrum self_consistent_spectrum(const Atom& atom, const Material& m,
                                  double z, const quad::Spec& spec,
                                  const SpectrumOptions& opts = {});

// Resonant near-field force on the excited state, perpendicular dipole:
//   F1r = -3 d^2/(32 pi eps0 z^4) (|eps(Omega)|^2 - 1)/|eps(Omega) + 1|^2
double resonant_force(const Atom& atom, const Material& m,
                      const Spectrum& spectrum, double z);

// Off-resonant force of the ground (state = 0) or excited (state = 1)
// level from the imaginary-axis quadrature with the broadened
// polarizability inserted; half-space geometry.
double offresonant_force(const Atom& atom, const Material& m,
                         const Spectrum& spectrum, int state, double z,
                         const quad::Spec& spec, bool* converged = nullptr);

// sigma_11(t) = e^{-Gamma_1 t} and its complement
std::vector<double> two_level_populations(double gamma_excited, double t);

// General branching matrix Gamma_n^m (rate of state n into channel m);
// solved by eigen-decomposition of the rate matrix.
std::vector<double> populations(const std::vector<std::vector<double>>& branching,
                                int initial, double t);

struct ForcePoint {
    double t;
    double force;
};

// <F(t)> = sigma_11(t) (F1r + F1or) + sigma_00(t) F0 for an atom prepared
// in the upper state of a two-level system.
std::vector<ForcePoint> force_trajectory(const Atom& atom, const Material& m,
                                         double z,
                                         const std::vector<double>& t_grid,
                                         const quad::Spec& spec,
                                         const SpectrumOptions& opts = {});

}  // namespace cpforge::dynamics
