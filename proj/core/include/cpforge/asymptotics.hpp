#pragma once

#include <vector>

#include "cpforge/atom.hpp"
#include "cpforge/material.hpp"
#include "cpforge/quadrature.hpp"
#include "cpforge/stack.hpp"

namespace cpforge::asymptotics {

// ---- infinitely thick plate (half space) ----------------------------------

// Retarded coefficient C4 (U = C4 / z^4, J m^4) from the single v-integral
// over the static response.
double c4(double eps0, double mu0, double alpha0, const quad::Spec& spec,
          quad::Result* detail = nullptr);

// weak-response linearization, C4 = -(hbar c alpha0 / 640 pi^2 eps0)
// (23 chi_e - 7 chi_m)
double c4_weak(double chi_e, double chi_m, double alpha0);

// strong-response closed form in the static impedance Z = sqrt(mu0/eps0)
double c4_strong(double impedance, double alpha0);

// root of the strong-limit bracket (the border impedance, ~2.26)
double strong_border_impedance();

struct NonretardedCoeffs {
    double c3 = 0.0;  // J m^3, attractive
    double c1 = 0.0;  // J m,   repulsive
    bool converged = true;
};

// Nonretarded coefficients, U = -C3/z^3 + C1/z, by u-quadrature.
NonretardedCoeffs c3_c1(const Material& m, const Atom& atom,
                        const quad::Spec& spec);

// closed forms valid for a two-level atom with undamped single resonances in
// the weak-electric regime (omega_Pe << omega_Te, omega_Pe << omega_Pm)
NonretardedCoeffs c3_c1_weak_electric(const Material& m, const Atom& atom);

struct WallGeometry {
    double z_max = 0.0;   // m
    double height = 0.0;  // J
    bool exists = false;
};

// Wall maximum of U = -C3/z^3 + C1/z: z_max = sqrt(3 C3/C1),
// U_max = (2/3) sqrt(C1^3/(3 C3)).
WallGeometry wall_geometry(double c3, double c1);

// closed forms from the weak-electric coefficients
WallGeometry wall_weak_electric(const Material& m, const Atom& atom);

struct BorderPoint {
    double eps0;
    double mu0;
    bool converged = true;
};

// mu(0) root of C4 = 0 for one eps(0); unique by monotonicity of C4
BorderPoint border_root(double eps0, double alpha0, const quad::Spec& spec);
std::vector<BorderPoint> border_curve(const std::vector<double>& eps0_grid,
                                      double alpha0, const quad::Spec& spec);

// ---- asymptotically thin plate ---------------------------------------------

// D5 closed form from the static response (U = D5 / z^5)
double d5(double eps0, double mu0, double alpha0, double d);

struct ThinPlateCoeffs {
    double d5 = 0.0;  // J m^5
    double d4 = 0.0;  // J m^4
    double d2 = 0.0;  // J m^2
    bool converged = true;
};

// D5 plus the nonretarded D4, D2 (U = -D4/z^4 + D2/z^2) by u-quadrature
ThinPlateCoeffs d5_d4_d2(const Material& m, const Atom& atom, double d,
                         const quad::Spec& spec);

// ---- wall engineering on the full quadrature -------------------------------

struct CurveMaximum {
    double z = 0.0;
    double U = 0.0;
    bool exists = false;
};

// numeric maximum of the full potential over a z-window (log-grid scan plus
// golden-section refinement); exists only if the maximum is positive
CurveMaximum wall_maximum(const LayerStack& stack, const Atom& atom,
                          double z_lo, double z_hi, const quad::Spec& spec);

struct ThicknessOptimum {
    double d = 0.0;       // m
    double height = 0.0;  // J
    bool has_wall = false;
};

// golden-section search over log d maximizing the wall height of the full
// slab potential
ThicknessOptimum optimal_thickness(const Material& m, const Atom& atom,
                                   double d_lo, double d_hi, double z_lo,
                                   double z_hi, const quad::Spec& spec);

}  // namespace cpforge::asymptotics
