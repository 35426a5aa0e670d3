#include "cpforge/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "cpforge/constants.hpp"
#include "cpforge/potential.hpp"

namespace cpforge::asymptotics {

using namespace constants;

namespace {

double u_scale(const Material& m, const Atom& atom) {
    return std::max(atom.max_transition(), std::max(m.max_resonance(), atom.max_transition()));
}

double golden_max(const std::function<double(double)>& f, double a, double b,
                  double rel_tol, double* fmax) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while ((b - a) > rel_tol * (std::fabs(a) + std::fabs(b))) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    if (fmax) *fmax = std::max(f1, f2);
    return 0.5 * (a + b);
}

}  // namespace

double c4(double eps0, double mu0, double alpha0, const quad::Spec& spec,
          quad::Result* detail) {
    const double em1 = eps0 * mu0 - 1.0;
    auto integrand = [&](double v) {
        const double root = std::sqrt(em1 + v * v);
        const double fe = (eps0 * v - root) / (eps0 * v + root);
        const double fm = (mu0 * v - root) / (mu0 * v + root);
        const double v2 = v * v;
        return (2.0 / v2 - 1.0 / (v2 * v2)) * fe - fm / (v2 * v2);
    };
    quad::Result res = quad::integrate_semi_infinite(integrand, 1.0, spec);
    const double prefactor =
        -3.0 * hbar * speed_of_light * alpha0 / (64.0 * pi * pi * epsilon0);
    res.value *= prefactor;
    res.error *= std::fabs(prefactor);
    if (detail) *detail = res;
    return res.value;
}

double c4_weak(double chi_e, double chi_m, double alpha0) {
    return -hbar * speed_of_light * alpha0 / (640.0 * pi * pi * epsilon0) *
           (23.0 * chi_e - 7.0 * chi_m);
}

namespace {

// bracket of the strong-response closed form; positive means attraction
double strong_bracket(double Z) {
    const double l1 = std::log1p(Z);
    const double l2 = std::log1p(1.0 / Z);
    return -2.0 / (Z * Z * Z) * l1 + 2.0 / (Z * Z) + 4.0 / Z * l1 - 1.0 / Z -
           4.0 / 3.0 - Z + 2.0 * Z * Z - 2.0 * Z * Z * Z * l2;
}

}  // namespace

double c4_strong(double impedance, double alpha0) {
    return -3.0 * hbar * speed_of_light * alpha0 /
           (64.0 * pi * pi * epsilon0) * strong_bracket(impedance);
}

double strong_border_impedance() {
    double lo = 1.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (strong_bracket(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

NonretardedCoeffs c3_c1(const Material& m, const Atom& atom,
                        const quad::Spec& spec) {
    const double scale = u_scale(m, atom);

    auto c3_integrand = [&](double u) {
        const double eps = m.permittivity_iu(u);
        return atom.polarizability_iu(u) * (eps - 1.0) / (eps + 1.0);
    };
    auto c1_integrand = [&](double u) {
        const double eps = m.permittivity_iu(u);
        const double mu = m.permeability_iu(u);
        const double bracket = (eps - 1.0) / (eps + 1.0) +
                               (mu - 1.0) / (mu + 1.0) +
                               2.0 * eps * (eps * mu - 1.0) /
                                   ((eps + 1.0) * (eps + 1.0));
        return u * u * atom.polarizability_iu(u) * bracket;
    };

    quad::Result r3 = quad::integrate_semi_infinite(c3_integrand, 0.0, spec, scale);
    quad::Result r1 = quad::integrate_semi_infinite(c1_integrand, 0.0, spec, scale);

    NonretardedCoeffs out;
    out.c3 = hbar / (16.0 * pi * pi * epsilon0) * r3.value;
    out.c1 = mu0 * hbar / (16.0 * pi * pi) * r1.value;
    out.converged = r3.converged && r1.converged;
    return out;
}

NonretardedCoeffs c3_c1_weak_electric(const Material& m, const Atom& atom) {
    if (m.electric().size() != 1 || m.magnetic().size() != 1)
        throw std::invalid_argument(
            "weak-electric closed forms need exactly one resonance per channel");
    const auto& e = m.electric().front();
    const auto& mg = m.magnetic().front();
    const auto& t = atom.transition();
    const double w10 = t.frequency;
    const double wSm = std::sqrt(mg.transverse * mg.transverse +
                                 0.5 * mg.plasma * mg.plasma);

    NonretardedCoeffs out;
    out.c3 = t.dipole_sq / (96.0 * pi * epsilon0) *
             (e.plasma * e.plasma) / (e.transverse * e.transverse) *
             e.transverse / (w10 + e.transverse);
    out.c1 = mu0 * t.dipole_sq * mg.plasma * mg.plasma / (96.0 * pi) * w10 *
             (2.0 * w10 + wSm + mg.transverse) /
             ((w10 + wSm) * (w10 + mg.transverse));
    return out;
}

WallGeometry wall_geometry(double c3, double c1) {
    WallGeometry out;
    if (!(c3 > 0.0) || !(c1 > 0.0)) return out;
    out.z_max = std::sqrt(3.0 * c3 / c1);
    out.height = 2.0 / 3.0 * std::sqrt(c1 * c1 * c1 / (3.0 * c3));
    out.exists = true;
    return out;
}

WallGeometry wall_weak_electric(const Material& m, const Atom& atom) {
    const auto coeffs = c3_c1_weak_electric(m, atom);
    return wall_geometry(coeffs.c3, coeffs.c1);
}

BorderPoint border_root(double eps0, double alpha0, const quad::Spec& spec) {
    BorderPoint out{eps0, 1.0, true};
    double lo = 1.0, hi = 1e4;
    // C4 increases with mu(0): attraction at lo, repulsion once hi is large
    // enough (grow the default bracket for very strong eps0)
    while (!(c4(eps0, hi, alpha0, spec) > 0.0)) {
        hi *= 10.0;
        if (hi > 1e12) {
            out.converged = false;
            return out;
        }
    }
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (c4(eps0, mid, alpha0, spec) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    out.mu0 = 0.5 * (lo + hi);
    return out;
}

std::vector<BorderPoint> border_curve(const std::vector<double>& eps0_grid,
                                      double alpha0, const quad::Spec& spec) {
    std::vector<BorderPoint> curve;
    curve.reserve(eps0_grid.size());
    for (double e : eps0_grid) curve.push_back(border_root(e, alpha0, spec));
    return curve;
}

double d5(double eps0, double mu0_, double alpha0, double d) {
    return -hbar * speed_of_light * alpha0 * d /
           (160.0 * pi * pi * epsilon0) *
           ((14.0 * eps0 * eps0 - 9.0) / eps0 - (6.0 * mu0_ * mu0_ - 1.0) / mu0_);
}

ThinPlateCoeffs d5_d4_d2(const Material& m, const Atom& atom, double d,
                         const quad::Spec& spec) {
    const double scale = u_scale(m, atom);

    auto d4_integrand = [&](double u) {
        const double eps = m.permittivity_iu(u);
        return atom.polarizability_iu(u) * (eps * eps - 1.0) / eps;
    };
    auto d2_integrand = [&](double u) {
        const double eps = m.permittivity_iu(u);
        const double mu = m.permeability_iu(u);
        const double bracket = (eps * eps - 1.0) / eps + (mu * mu - 1.0) / mu +
                               2.0 * (eps * mu - 1.0) / eps;
        return u * u * atom.polarizability_iu(u) * bracket;
    };

    quad::Result r4 = quad::integrate_semi_infinite(d4_integrand, 0.0, spec, scale);
    quad::Result r2 = quad::integrate_semi_infinite(d2_integrand, 0.0, spec, scale);

    ThinPlateCoeffs out;
    out.d5 = d5(m.permittivity_iu(0.0), m.permeability_iu(0.0),
                atom.static_polarizability(), d);
    out.d4 = 3.0 * hbar * d / (64.0 * pi * pi * epsilon0) * r4.value;
    out.d2 = mu0 * hbar * d / (64.0 * pi * pi) * r2.value;
    out.converged = r4.converged && r2.converged;
    return out;
}

CurveMaximum wall_maximum(const LayerStack& stack, const Atom& atom,
                          double z_lo, double z_hi, const quad::Spec& spec) {
    auto U = [&](double logz) {
        auto alpha = [&](double u) { return atom.polarizability_iu(u); };
        return potential_energy(stack, alpha,
                                default_omega_scale(stack, atom),
                                std::exp(logz), spec)
            .value;
    };

    // coarse log scan to bracket the maximum
    const int n = 40;
    const double la = std::log(z_lo), lb = std::log(z_hi);
    double best = la;
    double best_val = U(la);
    for (int i = 1; i <= n; ++i) {
        const double x = la + (lb - la) * i / n;
        const double v = U(x);
        if (v > best_val) {
            best_val = v;
            best = x;
        }
    }

    CurveMaximum out;
    const double step = (lb - la) / n;
    double fmax = best_val;
    const double refined =
        golden_max(U, std::max(la, best - step), std::min(lb, best + step),
                   1e-6, &fmax);
    out.z = std::exp(refined);
    out.U = fmax;
    out.exists = fmax > 0.0;
    return out;
}

ThicknessOptimum optimal_thickness(const Material& m, const Atom& atom,
                                   double d_lo, double d_hi, double z_lo,
                                   double z_hi, const quad::Spec& spec) {
    auto height = [&](double logd) {
        const auto stack = LayerStack::slab(m, std::exp(logd));
        const auto peak = wall_maximum(stack, atom, z_lo, z_hi, spec);
        return peak.exists ? peak.U : 0.0;
    };

    ThicknessOptimum out;
    double fmax = 0.0;
    const double logd =
        golden_max(height, std::log(d_lo), std::log(d_hi), 1e-4, &fmax);
    if (!(fmax > 0.0)) return out;
    out.d = std::exp(logd);
    out.height = fmax;
    out.has_wall = true;
    return out;
}

}  // namespace cpforge::asymptotics
