#include "cpforge/potential.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cpforge/constants.hpp"

namespace cpforge {

using namespace constants;

namespace {

// Inner b-integral for one wall at effective distance zbar:
//   W(u) = int_{u/c}^inf db e^{-2 b zbar} K(u, b),
//   K = u^2 rs/Ds - (2 b^2 c^2 - u^2) rp/Dp,
// mapped by t = 2 b zbar so the weight is e^{-t} and truncated after
// spec.exp_cutoff decades of decay.
quad::Result wall_integral(const LayerStack& stack, Side side, double u,
                           double zbar, double dj, const quad::Spec& spec) {
    const double c2 = speed_of_light * speed_of_light;
    const double t0 = 2.0 * zbar * u / speed_of_light;

    // The e^{-t0} prefactor is pulled out of the quadrature so the kernel
    // stays well scaled even where the total underflows.
    auto kernel = [&](double tau) {
        const double b = u / speed_of_light + tau / (2.0 * zbar);
        const double q = q_from_b(u, b);
        const double rs = reflection_recursive(stack, side, Polarization::s, u, q);
        const double rp = reflection_recursive(stack, side, Polarization::p, u, q);
        double Ds = 1.0, Dp = 1.0;
        if (std::isfinite(dj)) {
            const double other_s =
                reflection_recursive(stack, side == Side::minus ? Side::plus : Side::minus,
                                     Polarization::s, u, q);
            const double other_p =
                reflection_recursive(stack, side == Side::minus ? Side::plus : Side::minus,
                                     Polarization::p, u, q);
            const double damp = std::exp(-2.0 * b * dj);
            Ds = 1.0 - rs * other_s * damp;
            Dp = 1.0 - rp * other_p * damp;
        }
        return std::exp(-tau) *
               (u * u * rs / Ds - (2.0 * b * b * c2 - u * u) * rp / Dp) /
               (2.0 * zbar);
    };

    quad::Result res = quad::integrate(kernel, 0.0, spec.exp_cutoff, spec);
    const double damp = std::exp(-t0);
    res.value *= damp;
    res.error *= damp;
    return res;
}

}  // namespace

double default_omega_scale(const LayerStack& stack, const Atom& atom) {
    double scale = atom.max_transition();
    for (std::size_t l = 0; l < stack.size(); ++l)
        scale = std::max(scale, stack.layer(static_cast<int>(l)).material.max_resonance());
    return scale;
}

quad::Result potential_energy(const LayerStack& stack,
                              const PolarizabilityFn& alpha,
                              double omega_scale, double z,
                              const quad::Spec& spec) {
    const double dj = stack.atom_layer_thickness();
    const bool outer = stack.atom_in_outer_layer();
    if (!(z > 0.0) || (!outer && !(z < dj)))
        throw std::invalid_argument("atom position outside the vacuum layer");

    quad::Spec inner = spec;
    inner.rel_tol = spec.rel_tol / 10.0;  // error budget for the nested integral

    bool inner_converged = true;
    auto outer_integrand = [&](double u) {
        quad::Result w = wall_integral(stack, Side::minus, u, z, dj, inner);
        if (!outer) w += wall_integral(stack, Side::plus, u, dj - z, dj, inner);
        if (!w.converged) inner_converged = false;
        return alpha(u) * w.value;
    };

    quad::Result res = quad::integrate_semi_infinite(outer_integrand, 0.0, spec,
                                                     omega_scale);
    res.value *= hbar * mu0 / (8.0 * pi * pi);
    res.error *= hbar * mu0 / (8.0 * pi * pi);
    res.converged = res.converged && inner_converged;
    return res;
}

namespace {

PotentialSample sample_with_force(const LayerStack& stack, const Atom& atom,
                                  double z, const quad::Spec& spec) {
    const double scale = default_omega_scale(stack, atom);
    auto alpha = [&](double u) { return atom.polarizability_iu(u); };
    auto U = [&](double zz) {
        return potential_energy(stack, alpha, scale, zz, spec);
    };

    PotentialSample out;
    out.z = z;
    quad::Result center = U(z);
    out.U = center.value;
    out.error = center.error;
    out.converged = center.converged;

    const double dj = stack.atom_layer_thickness();
    const double room = std::isfinite(dj) ? std::min(z, dj - z) : z;
    const double h = room / 100.0;
    const quad::Result um2 = U(z - 2 * h), um1 = U(z - h), up1 = U(z + h),
                       up2 = U(z + 2 * h);
    out.F = -(um2.value - 8.0 * um1.value + 8.0 * up1.value - up2.value) /
            (12.0 * h);
    out.converged = out.converged && um2.converged && um1.converged &&
                    up1.converged && up2.converged;
    return out;
}

}  // namespace

PotentialSample potential_outside(const LayerStack& stack, const Atom& atom,
                                  double z, const quad::Spec& spec) {
    if (!stack.atom_in_outer_layer())
        throw std::invalid_argument("atom layer is not the outer layer");
    return sample_with_force(stack, atom, z, spec);
}

PotentialSample potential_in_cavity(const LayerStack& stack, const Atom& atom,
                                    double z, const quad::Spec& spec) {
    if (stack.atom_in_outer_layer())
        throw std::invalid_argument("atom layer is not an inner layer");
    return sample_with_force(stack, atom, z, spec);
}

PotentialSample potential_sample(const LayerStack& stack, const Atom& atom,
                                 double z, const quad::Spec& spec) {
    return sample_with_force(stack, atom, z, spec);
}

PotentialCurve sample_curve(const LayerStack& stack, const Atom& atom,
                            const std::vector<double>& z_grid,
                            const quad::Spec& spec, int threads) {
    PotentialCurve curve;
    curve.samples.resize(z_grid.size());

    const int workers =
        std::max(1, std::min<int>(threads, static_cast<int>(z_grid.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < z_grid.size(); ++i)
            curve.samples[i] = potential_sample(stack, atom, z_grid[i], spec);
        return curve;
    }

    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex m;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> lock(m);
                    if (next >= z_grid.size()) return;
                    i = next++;
                }
                curve.samples[i] = potential_sample(stack, atom, z_grid[i], spec);
            }
        });
    }
    for (auto& t : pool) t.join();
    return curve;
}

}  // namespace cpforge
