#include <doctest.h>

#include <cmath>
#include <vector>

#include "cpforge/constants.hpp"
#include "cpforge/stack.hpp"

using namespace cpforge;
using constants::speed_of_light;

namespace {

const double w0 = 2.3e15;  // frequency scale of the test grids (rad/s)

Material magnetodielectric(double gamma = 1e-3) {
    return Material({Resonance(0.75 * w0, 1.03 * w0, gamma * w0)},
                    {Resonance(2.0 * w0, 1.0 * w0, gamma * w0)});
}

Material swapped(const Material& m) {
    return Material(m.magnetic(), m.electric());
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

}  // namespace

TEST_CASE("single interface: electrostatic limit of r_p") {
    // mu = 1, eps = 2, q >> u/c: r_p -> (2-1)/(2+1)
    Material m({Resonance(1.0 * w0, 1.0 * w0, 0.0)}, {});  // eps(0) = 2
    const double u = 1e-6 * w0;
    const double q = 1e3 * w0 / speed_of_light;
    auto hs = half_space_coefficients(m, u, q);
    CHECK(hs.rp == doctest::Approx(1.0 / 3.0).epsilon(1e-6));

    LayerStack stack = LayerStack::half_space(m);
    CHECK(reflection_recursive(stack, Side::minus, Polarization::p, u, q) ==
          doctest::Approx(hs.rp).epsilon(1e-14));
}

TEST_CASE("all-vacuum stacks do not scatter") {
    LayerStack stack({{Material{}, 0.0}, {Material{}, 1e-6}, {Material{}, 0.0}}, 2);
    for (double u : {0.0, 0.5 * w0, 3.0 * w0})
        for (double q : {1e-3 * w0 / speed_of_light, 2.0 * w0 / speed_of_light}) {
            for (auto side : {Side::minus, Side::plus})
                for (auto pol : {Polarization::s, Polarization::p})
                    CHECK(reflection_recursive(stack, side, pol, u, q) == 0.0);
        }
    auto hs = half_space_coefficients(Material{}, 0.7 * w0, w0 / speed_of_light);
    CHECK(hs.rs == 0.0);
    CHECK(hs.rp == 0.0);
}

TEST_CASE("recursion matches the half-space closed forms") {
    Material m = magnetodielectric();
    LayerStack stack = LayerStack::half_space(m);
    for (double u : log_grid(1e-3 * w0, 1e3 * w0, 25)) {
        for (double q : log_grid(1e-3 * w0 / speed_of_light,
                                 1e3 * w0 / speed_of_light, 25)) {
            auto closed = half_space_coefficients(m, u, q);
            const double rs =
                reflection_recursive(stack, Side::minus, Polarization::s, u, q);
            const double rp =
                reflection_recursive(stack, Side::minus, Polarization::p, u, q);
            CHECK(rs == doctest::Approx(closed.rs).epsilon(1e-12));
            CHECK(rp == doctest::Approx(closed.rp).epsilon(1e-12));
        }
    }
}

TEST_CASE("recursion matches the finite-slab closed forms") {
    Material m = magnetodielectric();
    for (double d : {1e-3 * speed_of_light / w0, 0.3 * speed_of_light / w0,
                     20.0 * speed_of_light / w0}) {
        LayerStack stack = LayerStack::slab(m, d);
        for (double u : log_grid(1e-2 * w0, 1e2 * w0, 12)) {
            for (double q : log_grid(1e-2 * w0 / speed_of_light,
                                     1e2 * w0 / speed_of_light, 12)) {
                auto closed = slab_coefficients(m, d, u, q);
                const double rs = reflection_recursive(stack, Side::minus,
                                                       Polarization::s, u, q);
                const double rp = reflection_recursive(stack, Side::minus,
                                                       Polarization::p, u, q);
                CHECK(rs == doctest::Approx(closed.rs).epsilon(1e-12));
                CHECK(rp == doctest::Approx(closed.rp).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("recursion matches the cavity closed forms") {
    Material m = magnetodielectric();
    const double s = 15.0 * speed_of_light / w0;
    LayerStack stack = LayerStack::cavity(m, s);
    for (double u : log_grid(1e-2 * w0, 1e2 * w0, 12)) {
        for (double q : log_grid(1e-2 * w0 / speed_of_light,
                                 1e2 * w0 / speed_of_light, 12)) {
            auto closed = cavity_coefficients(m, s, u, q);
            auto rec = reflections(stack, u, q);
            CHECK(rec.rs_minus == doctest::Approx(closed.rs_minus).epsilon(1e-12));
            CHECK(rec.rs_plus == doctest::Approx(closed.rs_plus).epsilon(1e-12));
            CHECK(rec.rp_minus == doctest::Approx(closed.rp_minus).epsilon(1e-12));
            CHECK(rec.rp_plus == doctest::Approx(closed.rp_plus).epsilon(1e-12));
            CHECK(rec.Ds == doctest::Approx(closed.Ds).epsilon(1e-12));
            CHECK(rec.Dp == doctest::Approx(closed.Dp).epsilon(1e-12));
        }
    }
}

TEST_CASE("slab limits: saturation to half space and thin-plate linearization") {
    Material m = magnetodielectric(0.0);
    const double u = 0.8 * w0;

    // b_M d = 10: half-space value to < 1e-8
    {
        const double q = 1.1 * w0 / speed_of_light;
        const double bm = axial_decay(m, u, q);
        const double d = 10.0 / bm;
        auto slab = slab_coefficients(m, d, u, q);
        auto hs = half_space_coefficients(m, u, q);
        CHECK(std::fabs(slab.rs - hs.rs) < 1e-8);
        CHECK(std::fabs(slab.rp - hs.rp) < 1e-8);
    }

    // b_M d = 1e-4: thin-plate forms to O((b_M d)^2)
    {
        const double q = 0.9 * w0 / speed_of_light;
        const double bm = axial_decay(m, u, q);
        const double d = 1e-4 / bm;
        auto slab = slab_coefficients(m, d, u, q);
        auto thin = thin_plate_coefficients(m, d, u, q);
        CHECK(slab.rs == doctest::Approx(thin.rs).epsilon(2e-7));
        CHECK(slab.rp == doctest::Approx(thin.rp).epsilon(2e-7));
    }

    // vanishing slab
    auto tiny = slab_coefficients(m, 1e-30, u, w0 / speed_of_light);
    CHECK(tiny.rs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::fabs(tiny.rs) < 1e-12);
    CHECK(std::fabs(tiny.rp) < 1e-12);
}

TEST_CASE("half-space sign structure and duality") {
    Material electric({Resonance(0.9 * w0, 1.1 * w0, 0.0)}, {});
    Material magnetic({}, {Resonance(0.9 * w0, 1.1 * w0, 0.0)});

    for (double u : log_grid(1e-2 * w0, 1e2 * w0, 10)) {
        for (double q : log_grid(1e-2 * w0 / speed_of_light,
                                 1e2 * w0 / speed_of_light, 10)) {
            auto e = half_space_coefficients(electric, u, q);
            auto mg = half_space_coefficients(magnetic, u, q);
            CHECK(e.rs < 0.0);
            CHECK(e.rp > 0.0);
            CHECK(mg.rs > 0.0);
            CHECK(mg.rp < 0.0);
            // eps <-> mu swap exchanges the polarizations exactly
            CHECK(e.rs == doctest::Approx(mg.rp).epsilon(1e-14));
            CHECK(e.rp == doctest::Approx(mg.rs).epsilon(1e-14));
        }
    }
}

TEST_CASE("passivity bound and finite D for a five-layer stack") {
    Material a = magnetodielectric();
    Material b({Resonance(1.4 * w0, 0.8 * w0, 1e-2 * w0)}, {});
    const double lu = speed_of_light / w0;
    LayerStack stack({{a, 0.0},
                      {b, 0.4 * lu},
                      {Material{}, 2.0 * lu},
                      {b, 0.1 * lu},
                      {a, 0.0}},
                     2);
    for (double u : log_grid(1e-2 * w0, 1e2 * w0, 8)) {
        for (double q : log_grid(1e-2 * w0 / speed_of_light,
                                 1e2 * w0 / speed_of_light, 8)) {
            auto sets = reflections(stack, u, q);
            for (double r : {sets.rs_minus, sets.rs_plus, sets.rp_minus,
                             sets.rp_plus}) {
                CHECK(std::fabs(r) <= 1.0 + 1e-12);
            }
            CHECK(sets.Ds > 0.0);
            CHECK(sets.Ds <= 2.0);
            CHECK(sets.Dp > 0.0);
            CHECK(sets.Dp <= 2.0);
        }
    }
}

TEST_CASE("multiple-reflection factor is the geometric series limit") {
    Material m = magnetodielectric();
    const double s = 2.0 * speed_of_light / w0;
    const double u = 0.6 * w0, q = 0.8 * w0 / speed_of_light;
    auto set = cavity_coefficients(m, s, u, q);
    const double b = std::sqrt(u * u / (speed_of_light * speed_of_light) + q * q);
    const double ratio_p = set.rp_minus * set.rp_plus * std::exp(-2.0 * b * s);
    CHECK(std::fabs(ratio_p) < 1.0);
    double partial = 0.0, term = 1.0;
    for (int n = 0; n < 200; ++n) {
        partial += term;
        term *= ratio_p;
    }
    CHECK(partial == doctest::Approx(1.0 / set.Dp).epsilon(1e-12));
}

TEST_CASE("(u, b) entry points agree with (u, q)") {
    Material m = magnetodielectric();
    LayerStack stack = LayerStack::half_space(m);
    const double u = 0.9 * w0;
    const double q = 1.7 * w0 / speed_of_light;
    const double b = std::sqrt(u * u / (speed_of_light * speed_of_light) + q * q);
    CHECK(q_from_b(u, b) == doctest::Approx(q).epsilon(1e-12));
    CHECK(reflection_recursive_b(stack, Side::minus, Polarization::p, u, b) ==
          doctest::Approx(reflection_recursive(stack, Side::minus,
                                               Polarization::p, u, q))
              .epsilon(1e-14));
    CHECK_THROWS(q_from_b(u, 0.5 * u / speed_of_light));
}

TEST_CASE("stack validation") {
    Material m = magnetodielectric();
    // atom layer must be vacuum
    CHECK_THROWS(LayerStack({{m, 0.0}, {m, 0.0}}, 1));
    // inner thickness must be positive
    CHECK_THROWS(LayerStack({{m, 0.0}, {Material{}, 0.0}, {m, 0.0}}, 1));
    // atom layer 0 is reoriented to the outer layer
    LayerStack reversed({{Material{}, 0.0}, {m, 0.0}}, 0);
    CHECK(reversed.atom_in_outer_layer());
    CHECK(reversed.atom_layer() == 1);
}
