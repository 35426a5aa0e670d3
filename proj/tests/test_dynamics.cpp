#include <doctest.h>

#include <cmath>
#include <complex>

#include "cpforge/constants.hpp"
#include "cpforge/dynamics.hpp"
#include "cpforge/potential.hpp"

using namespace cpforge;
using namespace cpforge::constants;
namespace dyn = cpforge::dynamics;

namespace {

const double wTe = 2.0e15;  // rad/s, medium scale of the Fig. 1 setup
const double lam = 2.0 * pi * speed_of_light / wTe;

Material fig1_material() {
    return Material({Resonance(0.75 * wTe, wTe, 0.01 * wTe)}, {});
}

Atom fig1_atom(double omega10) {
    return Atom::two_level_strength(omega10, 1e-7, wTe);
}

// Contour-rotated route for the ground-state shift: imaginary-axis double
// integral of the zz scattering kernel (independent of the PV machinery).
double ground_shift_imaginary_axis(double dipole_sq, const Material& m,
                                   double z, double omega, const quad::Spec& spec) {
    auto kernel = [&](double u) {
        // G1zz(z, z, iu) without the -c^2/(4 pi u^2) prefactor
        auto inner = [&](double t) {
            const double b = (u / speed_of_light) + t / (2.0 * z);
            const double q2 = b * b - u * u / (speed_of_light * speed_of_light);
            const double q = q2 > 0.0 ? std::sqrt(q2) : 0.0;
            const double bm = axial_decay(m, u, q);
            const double eps = m.permittivity_iu(u);
            const double rp = (eps * b - bm) / (eps * b + bm);
            return q2 * rp * std::exp(-t) / (2.0 * z);
        };
        const double damp = std::exp(-2.0 * z * u / speed_of_light);
        return quad::integrate(inner, 0.0, spec.exp_cutoff, spec).value * damp;
    };
    auto outer = [&](double u) {
        return kernel(u) / (omega * omega + u * u);
    };
    const double integral =
        quad::integrate_semi_infinite(outer, 0.0, spec, omega).value;
    // delta_omega_0 = -(mu0 d^2 c^2 omega / 4 pi^2 hbar) * integral
    return -mu0 * dipole_sq * speed_of_light * speed_of_light * omega /
           (4.0 * pi * pi * hbar) * integral;
}

}  // namespace

TEST_CASE("scattering Green function vanishes for vacuum") {
    quad::Spec spec;
    CHECK(dyn::im_green_zz(Material{}, 0.01 * lam, wTe, spec) == 0.0);
    CHECK(dyn::green_zz(Material{}, 0.01 * lam, wTe, spec).real() == 0.0);
}

TEST_CASE("near-field scaling of Im G: z^-3 with the surface-response weight") {
    quad::Spec spec;
    Material m = fig1_material();
    const double w = 0.9 * wTe;

    const double z1 = 1e-3 * speed_of_light / w;
    const double z2 = 1e-2 * speed_of_light / w;
    const double g1 = dyn::im_green_zz(m, z1, w, spec);
    const double g2 = dyn::im_green_zz(m, z2, w, spec);
    const double slope = std::log(g2 / g1) / std::log(z2 / z1);
    CHECK(slope == doctest::Approx(-3.0).epsilon(0.017));

    // coefficient proportional to Im[(eps-1)/(eps+1)] across materials
    for (double wpe : {0.4, 0.75, 1.3}) {
        Material mv({Resonance(wpe * wTe, wTe, 0.01 * wTe)}, {});
        const std::complex<double> eps = mv.permittivity({w, 0.0});
        const double surface = ((eps - 1.0) / (eps + 1.0)).imag();
        const double predicted = surface * speed_of_light * speed_of_light /
                                 (16.0 * pi * w * w * z1 * z1 * z1);
        CHECK(dyn::im_green_zz(mv, z1, w, spec) ==
              doctest::Approx(predicted).epsilon(0.02));
    }
}

TEST_CASE("level width: gate, free-space limit, near-field law") {
    quad::Spec spec;
    Material m = fig1_material();
    const double d2 = fig1_atom(wTe).transition().dipole_sq;

    CHECK(dyn::level_width(d2, m, 0.01 * lam, -wTe, spec) == 0.0);
    CHECK(dyn::level_width(d2, m, 0.01 * lam, 0.0, spec) == 0.0);

    // z -> infinity: the scattering part dies out
    const double far = dyn::level_width(d2, m, 300.0 * lam, wTe, spec);
    CHECK(far == doctest::Approx(dyn::free_space_rate(d2, wTe)).epsilon(1e-3));

    // near field: Gamma ~ z^-3 Im[(eps-1)/(eps+1)] d^2 / (4 pi hbar eps0)
    const double w = 0.9 * wTe;
    const double z = 1e-3 * speed_of_light / w;
    const std::complex<double> eps = m.permittivity({w, 0.0});
    const double surface = ((eps - 1.0) / (eps + 1.0)).imag();
    const double nearfield = d2 * surface / (8.0 * pi * hbar * epsilon0 * z * z * z);
    CHECK(dyn::level_width(d2, m, z, w, spec) ==
          doctest::Approx(nearfield).epsilon(0.02));
}

TEST_CASE("level shift: vacuum, sign, near-field scaling, contour identity") {
    quad::Spec spec;
    spec.rel_tol = 1e-7;
    Material m = fig1_material();
    const double d2 = fig1_atom(wTe).transition().dipole_sq;

    CHECK(dyn::level_shift(d2, Material{}, 0.01 * lam, -wTe, spec) == 0.0);

    const double z1 = 0.0075 * lam;
    const double down1 = dyn::level_shift(d2, m, z1, -wTe, spec);
    CHECK(down1 < 0.0);  // attractive level pull of the ground state

    // z^-3 growth in the near field
    const double z2 = 2.0 * z1;
    const double down2 = dyn::level_shift(d2, m, z2, -wTe, spec);
    const double slope = std::log(down2 / down1) / std::log(z2 / z1);
    CHECK(slope == doctest::Approx(-3.0).epsilon(0.04));

    // independent route: contour-rotated imaginary-axis integral
    const double oracle = ground_shift_imaginary_axis(d2, m, z1, wTe, spec);
    CHECK(down1 == doctest::Approx(oracle).epsilon(1e-3));
}

TEST_CASE("self-consistent spectrum: vacuum and far field") {
    quad::Spec spec;
    Material m = fig1_material();
    Atom atom = fig1_atom(wTe);

    auto vac = dyn::self_consistent_spectrum(atom, Material{}, 0.01 * lam, spec);
    CHECK(vac.converged);
    CHECK(vac.omega_tilde == doctest::Approx(wTe).epsilon(1e-12));
    CHECK(vac.gamma_excited ==
          doctest::Approx(dyn::free_space_rate(atom.transition().dipole_sq, wTe))
              .epsilon(1e-9));
    CHECK(vac.gamma_ground == 0.0);

    quad::Spec loose;
    loose.rel_tol = 1e-5;
    loose.abs_floor = 1e-12;
    const double zfar = 1e3 * speed_of_light / wTe;
    const double up = dyn::level_shift(atom.transition().dipole_sq, m, zfar,
                                       wTe, loose);
    const double down = dyn::level_shift(atom.transition().dipole_sq, m, zfar,
                                         -wTe, loose);
    CHECK(std::fabs(up) < 1e-6 * wTe);
    CHECK(std::fabs(down) < 1e-6 * wTe);
}

TEST_CASE("fixed-point stability across the near-to-far range") {
    quad::Spec spec;
    spec.rel_tol = 1e-6;
    Material m = fig1_material();
    Atom atom = fig1_atom(wTe);
    for (double z : {1e-3, 1e-2, 0.1, 1.0}) {
        auto s = dyn::self_consistent_spectrum(atom, m, z * speed_of_light / wTe,
                                               spec);
        CHECK(s.converged);
        CHECK(s.omega_tilde > 0.0);
        CHECK(s.gamma_excited >= 0.0);
    }
}

TEST_CASE("resonant force: closed-form behaviour") {
    Material m = fig1_material();
    const double z = 0.0075 * lam;

    // vacuum: |eps| = 1 kills the numerator
    dyn::Spectrum s;
    s.omega_tilde = wTe;
    CHECK(dyn::resonant_force(fig1_atom(wTe), Material{}, s, z) == 0.0);

    // transparent region, real eps > 1: attraction
    s.omega_tilde = 0.3 * wTe;
    CHECK(dyn::resonant_force(fig1_atom(0.3 * wTe), m, s, z) < 0.0);

    // the perturbative dispersion profile changes sign near the surface
    // resonance Re eps = -1 at omega_S = sqrt(wTe^2 + wPe^2/2)
    const double ws = std::sqrt(1.0 + 0.5 * 0.75 * 0.75) * wTe;
    dyn::Spectrum below, above;
    below.omega_tilde = 0.97 * ws;
    above.omega_tilde = 1.03 * ws;
    const double f_below =
        dyn::resonant_force(fig1_atom(below.omega_tilde), m, below, z);
    const double f_above =
        dyn::resonant_force(fig1_atom(above.omega_tilde), m, above, z);
    CHECK(f_below * f_above < 0.0);
}

TEST_CASE("width sensitivity: resonant linear, off-resonant quadratic") {
    quad::Spec spec;
    spec.rel_tol = 1e-9;
    Material m = fig1_material();
    const double w10 = 1.05 * wTe;
    Atom atom = fig1_atom(w10);
    const double z = 0.0075 * lam;

    auto with_width = dyn::self_consistent_spectrum(
        atom, m, z, spec, {false, true, 0.5, 1e-10, 200});
    const double gamma = with_width.gamma_excited;
    REQUIRE(gamma > 0.0);

    auto eval = [&](double scale) {
        dyn::Spectrum s;
        s.omega_tilde = w10;
        s.gamma_excited = gamma * scale;
        const double f_r = dyn::resonant_force(atom, m, s, z);
        const double f_or = dyn::offresonant_force(atom, m, s, 1, z, spec);
        return std::pair{f_r, f_or};
    };

    auto [fr0, for0] = eval(0.0);
    double prev_ratio = 0.0;
    bool first = true;
    for (double scale : {1.0, 0.5, 0.25}) {
        auto [fr, fo] = eval(scale);
        const double ratio = std::fabs(fo - for0) / std::fabs(fr - fr0);
        if (!first) {
            // quadratic-over-linear halves with Gamma
            CHECK(ratio == doctest::Approx(0.5 * prev_ratio).epsilon(0.2));
        }
        first = false;
        prev_ratio = ratio;
    }
}

TEST_CASE("ground-state force reduces to the perturbative potential gradient") {
    quad::Spec spec;
    Material m = fig1_material();
    const double w10 = wTe;
    Atom atom = fig1_atom(w10);
    const double z = 0.02 * lam;

    dyn::Spectrum bare;
    bare.omega_tilde = w10;
    const double f0 = dyn::offresonant_force(atom, m, bare, 0, z, spec);

    LayerStack hs = LayerStack::half_space(m);
    auto sample = potential_outside(hs, atom, z, spec);
    CHECK(f0 == doctest::Approx(sample.F).epsilon(1e-3));
}

TEST_CASE("populations: two-level decay and the general ladder") {
    const double gamma = 2.0;
    auto at = [&](double t) { return dyn::two_level_populations(gamma, t); };
    CHECK(at(0.0)[1] == 1.0);
    CHECK(at(0.0)[0] == 0.0);
    CHECK(at(std::log(2.0) / gamma)[1] == doctest::Approx(0.5).epsilon(1e-12));
    for (double t : {0.0, 0.3, 2.0}) {
        auto sigma = at(t);
        CHECK(sigma[0] + sigma[1] == doctest::Approx(1.0).epsilon(1e-12));
    }

    // three-level ladder 2 -> 1 -> 0 with a direct 2 -> 0 channel; closed
    // Bateman solution as the oracle
    const double g21 = 1.3, g20 = 0.4, g10 = 0.7;
    const double g2 = g21 + g20;
    std::vector<std::vector<double>> branching = {
        {0.0, 0.0, 0.0}, {g10, 0.0, 0.0}, {g20, g21, 0.0}};
    for (double t : {0.0, 0.2, 1.0, 4.0}) {
        auto sigma = dyn::populations(branching, 2, t);
        const double s2 = std::exp(-g2 * t);
        const double s1 = g21 / (g2 - g10) * (std::exp(-g10 * t) - std::exp(-g2 * t));
        CHECK(sigma[2] == doctest::Approx(s2).epsilon(1e-9));
        CHECK(sigma[1] == doctest::Approx(s1).epsilon(1e-9));
        CHECK(sigma[0] + sigma[1] + sigma[2] == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("force trajectory limits") {
    quad::Spec spec;
    spec.rel_tol = 1e-7;
    Material m = fig1_material();
    Atom atom = fig1_atom(0.6 * wTe);
    const double z = 0.02 * lam;

    dyn::SpectrumOptions opts;
    const auto spectrum = dyn::self_consistent_spectrum(atom, m, z, spec, opts);
    REQUIRE(spectrum.gamma_excited > 0.0);
    const double g1 = spectrum.gamma_excited;

    auto traj = dyn::force_trajectory(atom, m, z, {0.0, 10.0 / g1}, spec, opts);

    const double f1 = dyn::resonant_force(atom, m, spectrum, z) +
                      dyn::offresonant_force(atom, m, spectrum, 1, z, spec);
    const double f0 = dyn::offresonant_force(atom, m, spectrum, 0, z, spec);
    CHECK(traj[0].force == doctest::Approx(f1).epsilon(1e-9));
    CHECK(traj[1].force == doctest::Approx(f0).epsilon(1e-4));

    // Gamma -> 0: constant trajectory
    auto frozen = dyn::two_level_populations(0.0, 5.0);
    CHECK(frozen[1] == 1.0);
}
