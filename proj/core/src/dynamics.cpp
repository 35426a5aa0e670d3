#include "cpforge/dynamics.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "cpforge/constants.hpp"
#include "cpforge/potential.hpp"
#include "cpforge/stack.hpp"

namespace cpforge::dynamics {

using namespace constants;

namespace {

using cd = std::complex<double>;

// axial wave number with the Im >= 0 branch of passive media
cd beta_of(cd arg) {
    if (arg.imag() == 0.0) arg = cd(arg.real(), +0.0);
    return std::sqrt(arg);
}

}  // namespace

std::complex<double> green_zz(const Material& m, double z, double omega,
                              const quad::Spec& spec, bool* converged) {
    if (!(z > 0.0) || !(omega > 0.0))
        throw std::invalid_argument("green_zz needs z > 0 and omega > 0");
    const double k0 = omega / speed_of_light;
    const cd eps = m.permittivity(cd(omega, 0.0));
    const cd mu = m.permeability(cd(omega, 0.0));
    const cd n2m1 = eps * mu - 1.0;

    bool ok = true;

    // propagating part, parameterized by the vacuum beta in [0, k0]
    auto prop = [&](double beta, bool imag_part) {
        const cd bM = beta_of(n2m1 * k0 * k0 + beta * beta);
        const cd rp = (eps * beta - bM) / (eps * beta + bM);
        const cd phase = std::exp(cd(0.0, 2.0 * beta * z));
        const cd val = (k0 * k0 - beta * beta) * rp * phase;
        return imag_part ? val.imag() : val.real();
    };
    quad::Result pr, pim;
    const double phase_span = 2.0 * k0 * z;
    if (phase_span <= 50.0) {
        pr = quad::integrate([&](double b) { return prop(b, false); }, 0.0, k0,
                             spec);
        pim = quad::integrate([&](double b) { return prop(b, true); }, 0.0, k0,
                              spec);
    } else {
        // many oscillations across the aperture: sum half-period chunks
        const double chunk = pi / (2.0 * z);
        double left = 0.0;
        while (left < k0) {
            const double right = std::min(left + chunk, k0);
            pr += quad::integrate([&](double b) { return prop(b, false); },
                                  left, right, spec);
            pim += quad::integrate([&](double b) { return prop(b, true); },
                                   left, right, spec);
            left = right;
        }
    }
    ok = ok && pr.converged && pim.converged;
    const cd I_prop(pr.value, pim.value);

    // evanescent part, t = 2 kappa z with the e^{-t} weight
    auto evan = [&](double t, bool imag_part) {
        const double kappa = t / (2.0 * z);
        const cd bM = beta_of(n2m1 * k0 * k0 - kappa * kappa);
        const cd rp = (eps * cd(0.0, kappa) - bM) / (eps * cd(0.0, kappa) + bM);
        const cd val = (k0 * k0 + kappa * kappa) * rp * std::exp(-t) / (2.0 * z);
        return imag_part ? val.imag() : val.real();
    };
    quad::Result er = quad::integrate([&](double t) { return evan(t, false); },
                                      0.0, spec.exp_cutoff, spec);
    quad::Result ei = quad::integrate([&](double t) { return evan(t, true); },
                                      0.0, spec.exp_cutoff, spec);
    ok = ok && er.converged && ei.converged;
    const cd I_evan(er.value, ei.value);

    if (converged) *converged = ok;
    const double c2 = speed_of_light * speed_of_light;
    return cd(0.0, 1.0) * c2 / (4.0 * pi * omega * omega) * I_prop +
           c2 / (4.0 * pi * omega * omega) * I_evan;
}

double im_green_zz(const Material& m, double z, double omega,
                   const quad::Spec& spec, bool* converged) {
    return green_zz(m, z, omega, spec, converged).imag();
}

double free_space_rate(double dipole_sq, double omega) {
    const double c3 = speed_of_light * speed_of_light * speed_of_light;
    return omega * omega * omega * dipole_sq / (3.0 * pi * hbar * epsilon0 * c3);
}

double level_width(double dipole_sq, const Material& m, double z,
                   double omega_tilde, const quad::Spec& spec,
                   bool* converged) {
    if (converged) *converged = true;
    if (!(omega_tilde > 0.0)) return 0.0;  // Theta gate
    bool ok = true;
    const double img = im_green_zz(m, z, omega_tilde, spec, &ok);
    if (converged) *converged = ok;
    const double bulk = omega_tilde / (6.0 * pi * speed_of_light);
    const double rate = 2.0 * mu0 / hbar * omega_tilde * omega_tilde *
                        dipole_sq * (bulk + img);
    return std::max(rate, 0.0);
}

double level_shift(double dipole_sq, const Material& m, double z,
                   double omega_mk, const quad::Spec& spec, bool* converged) {
    bool ok = true;
    auto kernel = [&](double w) {
        bool one = true;
        const double img = im_green_zz(m, z, w, spec, &one);
        if (!one) ok = false;
        return mu0 * dipole_sq / (pi * hbar) * w * w * img;
    };

    const double scale = std::max(std::fabs(omega_mk), m.max_resonance());
    const double cut = std::max(4.0 * scale, 2.0 * std::fabs(omega_mk));
    const double window = 0.5 * std::fabs(omega_mk);

    quad::Result head =
        quad::principal_value(kernel, omega_mk, 0.0, cut, window, spec);

    // Sommerfeld tail: absolutely convergent, oscillatory with period
    // pi c / z in omega.  The tail is a correction to the head, which sets
    // its absolute tolerance.  In the near field the decay wins long before
    // the first oscillation, so a finite window with an explicit remainder
    // bound suffices; at large z the oscillation is summed in half-period
    // panels where alternation cuts it off.
    auto tail_kernel = [&](double w) { return kernel(w) / (omega_mk - w); };
    quad::Spec tail_spec = spec;
    tail_spec.abs_floor =
        std::max(spec.abs_floor, spec.rel_tol * std::fabs(head.value));
    const double half_period = pi * speed_of_light / (2.0 * z);
    quad::Result tail;
    if (half_period >= 2.0 * scale) {
        const double far = std::max(
            {40.0 * scale, 4.0 * half_period, 2.0 * cut});
        tail = quad::integrate(tail_kernel, cut, far, tail_spec);
        // kernel envelope decays like 1/w^2 past the resonances
        tail.error += std::fabs(tail_kernel(far)) * far;
    } else {
        tail = quad::detail::integrate_decaying_tail(tail_kernel, cut,
                                                     half_period, tail_spec);
    }

    if (converged) *converged = ok && head.converged && tail.converged;
    return head.value + tail.value;
}

Spectrum self_consistent_spectrum(const Atom& atom, const Material& m,
                                  double z, const quad::Spec& spec,
                                  const SpectrumOptions& opts) {
    const auto& t = atom.transition();
    Spectrum out;
    out.omega_tilde = t.frequency;
    out.converged = true;

    if (opts.include_shift) {
        bool ok = true;
        double wt = t.frequency;
        int iter = 0;
        bool fixed_point = false;
        for (; iter < opts.max_iterations; ++iter) {
            const double shift_up = level_shift(t.dipole_sq, m, z, wt, spec, &ok);
            const double shift_down =
                level_shift(t.dipole_sq, m, z, -wt, spec, &ok);
            const double target = t.frequency + shift_up - shift_down;
            const double next = wt + opts.relaxation * (target - wt);
            const bool done = std::fabs(next - wt) <= opts.tol * std::fabs(wt);
            wt = next;
            if (done) {
                fixed_point = true;
                ++iter;
                break;
            }
        }
        out.omega_tilde = wt;
        out.iterations = iter;
        out.converged = fixed_point && ok;
    }

    if (opts.include_width) {
        bool ok = true;
        out.gamma_excited =
            level_width(t.dipole_sq, m, z, out.omega_tilde, spec, &ok);
        out.converged = out.converged && ok;
    }
    out.gamma_ground = 0.0;  // no downward channel from the ground state
    return out;
}

double resonant_force(const Atom& atom, const Material& m,
                      const Spectrum& spectrum, double z) {
    const auto& t = atom.transition();
    if (!(spectrum.omega_tilde > 0.0)) return 0.0;
    const cd eps = m.permittivity(spectrum.Omega());
    const double num = std::norm(eps) - 1.0;
    const double den = std::norm(eps + 1.0);
    return -3.0 * t.dipole_sq / (32.0 * pi * epsilon0 * z * z * z * z) * num /
           den;
}

double offresonant_force(const Atom& atom, const Material& m,
                         const Spectrum& spectrum, int state, double z,
                         const quad::Spec& spec, bool* converged) {
    if (state != 0 && state != 1)
        throw std::invalid_argument("two-level atom: state must be 0 or 1");
    const auto& t = atom.transition();
    const double wt = spectrum.omega_tilde;
    const double g2 = 0.5 * (spectrum.gamma_excited + spectrum.gamma_ground);
    const double sign = (state == 0) ? 1.0 : -1.0;

    // symmetrized body-assisted polarizability on the imaginary axis
    auto alpha = [&](double u) {
        const double up = u + g2;
        const double um = u - g2;
        return sign * wt * t.dipole_sq / (3.0 * hbar) *
               (1.0 / (wt * wt + up * up) + 1.0 / (wt * wt + um * um));
    };

    const auto stack = LayerStack::half_space(m);
    const double scale = std::max(wt, m.max_resonance());
    auto U = [&](double zz) { return potential_energy(stack, alpha, scale, zz, spec); };

    const double h = z / 100.0;
    const quad::Result um2 = U(z - 2 * h), um1 = U(z - h), up1 = U(z + h),
                       up2 = U(z + 2 * h);
    if (converged)
        *converged = um2.converged && um1.converged && up1.converged &&
                     up2.converged;
    return -(um2.value - 8.0 * um1.value + 8.0 * up1.value - up2.value) /
           (12.0 * h);
}

std::vector<double> two_level_populations(double gamma_excited, double t) {
    const double upper = std::exp(-gamma_excited * t);
    return {1.0 - upper, upper};
}

std::vector<double> populations(const std::vector<std::vector<double>>& branching,
                                int initial, double t) {
    const int n = static_cast<int>(branching.size());
    if (n == 0) throw std::invalid_argument("empty branching matrix");
    if (initial < 0 || initial >= n)
        throw std::invalid_argument("initial state out of range");

    Eigen::MatrixXd rates = Eigen::MatrixXd::Zero(n, n);
    for (int from = 0; from < n; ++from) {
        if (static_cast<int>(branching[from].size()) != n)
            throw std::invalid_argument("branching matrix must be square");
        double total = 0.0;
        for (int to = 0; to < n; ++to) {
            if (to == from) continue;
            const double g = branching[from][to];
            if (g < 0.0) throw std::invalid_argument("negative branching rate");
            rates(to, from) += g;
            total += g;
        }
        rates(from, from) -= total;
    }

    Eigen::VectorXd sigma0 = Eigen::VectorXd::Zero(n);
    sigma0(initial) = 1.0;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(rates);
    const Eigen::MatrixXcd V = solver.eigenvectors();
    const Eigen::VectorXcd lambda = solver.eigenvalues();
    const Eigen::VectorXcd coeffs = V.partialPivLu().solve(sigma0.cast<cd>());

    std::vector<double> out(n, 0.0);
    for (int m_ = 0; m_ < n; ++m_) {
        cd acc = 0.0;
        for (int k = 0; k < n; ++k)
            acc += V(m_, k) * coeffs(k) * std::exp(lambda(k) * t);
        out[m_] = acc.real();
    }
    return out;
}

std::vector<ForcePoint> force_trajectory(const Atom& atom, const Material& m,
                                         double z,
                                         const std::vector<double>& t_grid,
                                         const quad::Spec& spec,
                                         const SpectrumOptions& opts) {
    const Spectrum spectrum = self_consistent_spectrum(atom, m, z, spec, opts);
    const double f1r = resonant_force(atom, m, spectrum, z);
    const double f1or = offresonant_force(atom, m, spectrum, 1, z, spec);
    const double f0 = offresonant_force(atom, m, spectrum, 0, z, spec);

    std::vector<ForcePoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        const auto sigma = two_level_populations(spectrum.gamma_excited, t);
        out.push_back({t, sigma[1] * (f1r + f1or) + sigma[0] * f0});
    }
    return out;
}

}  // namespace cpforge::dynamics
