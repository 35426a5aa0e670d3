#include "cpforge/stack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cpforge/constants.hpp"

namespace cpforge {

using constants::speed_of_light;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_vacuum_layer(const Layer& l) { return l.material.vacuum(); }

// material weight entering the Fresnel quotients: mu for s, eps for p
double response(const Material& m, Polarization pol, double u) {
    return pol == Polarization::s ? m.permeability_iu(u) : m.permittivity_iu(u);
}

}  // namespace

LayerStack::LayerStack(std::vector<Layer> layers, int atom_layer)
    : layers_(std::move(layers)), atom_layer_(atom_layer) {
    const int n = static_cast<int>(layers_.size()) - 1;
    if (n < 1) throw std::invalid_argument("stack needs at least two layers");
    if (atom_layer_ < 0 || atom_layer_ > n)
        throw std::invalid_argument("atom layer index out of range");
    // orient the stack so the atom layer is interior or the last layer
    if (atom_layer_ == 0) {
        std::reverse(layers_.begin(), layers_.end());
        atom_layer_ = n;
    }
    if (!is_vacuum_layer(layers_[atom_layer_]))
        throw std::invalid_argument("the atom layer must be vacuum");
    for (int l = 1; l < n; ++l)
        if (!(layers_[l].thickness > 0.0))
            throw std::invalid_argument("inner layer thicknesses must be > 0");
    layers_.front().thickness = kInf;
    layers_.back().thickness = kInf;
}

LayerStack LayerStack::half_space(const Material& m) {
    return LayerStack({{m, kInf}, {Material{}, kInf}}, 1);
}

LayerStack LayerStack::slab(const Material& m, double thickness) {
    return LayerStack({{Material{}, kInf}, {m, thickness}, {Material{}, kInf}}, 2);
}

LayerStack LayerStack::cavity(const Material& m, double separation) {
    return LayerStack({{m, kInf}, {Material{}, separation}, {m, kInf}}, 1);
}

double axial_decay(const Material& m, double u, double q) {
    const double k = u / speed_of_light;
    return std::sqrt(k * k * m.permittivity_iu(u) * m.permeability_iu(u) + q * q);
}

double reflection_recursive(const LayerStack& stack, Side side,
                            Polarization pol, double u, double q) {
    if (u < 0.0 || q < 0.0)
        throw std::invalid_argument("reflection coefficients need u, q >= 0");
    const int j = stack.atom_layer();
    const int n = stack.top();

    // walk from the outer boundary condition r = 0 inward to layer j
    double r = 0.0;
    const int step = (side == Side::minus) ? +1 : -1;
    const int first = (side == Side::minus) ? 1 : n - 1;
    const int last = j;
    if (side == Side::plus && j == n) return 0.0;  // no layers beyond j

    for (int l = first; (side == Side::minus) ? (l <= last) : (l >= last);
         l += step) {
        const int neighbour = l - step;  // l-1 for minus side, l+1 for plus side
        const Layer& here = stack.layer(l);
        const Layer& next = stack.layer(neighbour);
        const double b_here = axial_decay(here.material, u, q);
        const double b_next = axial_decay(next.material, u, q);
        const double w_here = response(here.material, pol, u) / b_here;
        const double w_next = response(next.material, pol, u) / b_next;

        double propagated = 0.0;
        if (r != 0.0 && std::isfinite(next.thickness))
            propagated = r * std::exp(-2.0 * b_next * next.thickness);

        r = ((w_next - w_here) + (w_next + w_here) * propagated) /
            ((w_next + w_here) + (w_next - w_here) * propagated);
        if (!std::isfinite(r))
            throw std::runtime_error("non-finite reflection coefficient");
    }
    return r;
}

HalfSpaceCoeffs half_space_coefficients(const Material& m, double u, double q) {
    const double b = std::sqrt(u * u / (speed_of_light * speed_of_light) + q * q);
    const double bm = axial_decay(m, u, q);
    const double mu = m.permeability_iu(u);
    const double eps = m.permittivity_iu(u);
    return {(mu * b - bm) / (mu * b + bm), (eps * b - bm) / (eps * b + bm)};
}

HalfSpaceCoeffs slab_coefficients(const Material& m, double d, double u,
                                  double q) {
    if (!(d > 0.0)) throw std::invalid_argument("slab thickness must be > 0");
    const double b = std::sqrt(u * u / (speed_of_light * speed_of_light) + q * q);
    const double bm = axial_decay(m, u, q);
    const double mu = m.permeability_iu(u);
    const double eps = m.permittivity_iu(u);
    const double th = std::tanh(bm * d);
    const double rs = (mu * mu * b * b - bm * bm) * th /
                      (2.0 * mu * b * bm + (mu * mu * b * b + bm * bm) * th);
    const double rp = (eps * eps * b * b - bm * bm) * th /
                      (2.0 * eps * b * bm + (eps * eps * b * b + bm * bm) * th);
    return {rs, rp};
}

HalfSpaceCoeffs thin_plate_coefficients(const Material& m, double d, double u,
                                        double q) {
    const double b = std::sqrt(u * u / (speed_of_light * speed_of_light) + q * q);
    const double bm = axial_decay(m, u, q);
    const double mu = m.permeability_iu(u);
    const double eps = m.permittivity_iu(u);
    return {(mu * mu * b * b - bm * bm) * d / (2.0 * mu * b),
            (eps * eps * b * b - bm * bm) * d / (2.0 * eps * b)};
}

ReflectionSet cavity_coefficients(const Material& m, double separation,
                                  double u, double q) {
    const auto hs = half_space_coefficients(m, u, q);
    const double b = std::sqrt(u * u / (speed_of_light * speed_of_light) + q * q);
    const double damp = std::exp(-2.0 * b * separation);
    return {hs.rs, hs.rs, hs.rp, hs.rp, 1.0 - hs.rs * hs.rs * damp,
            1.0 - hs.rp * hs.rp * damp};
}

ReflectionSet reflections(const LayerStack& stack, double u, double q) {
    ReflectionSet set{};
    set.rs_minus = reflection_recursive(stack, Side::minus, Polarization::s, u, q);
    set.rp_minus = reflection_recursive(stack, Side::minus, Polarization::p, u, q);
    set.rs_plus = reflection_recursive(stack, Side::plus, Polarization::s, u, q);
    set.rp_plus = reflection_recursive(stack, Side::plus, Polarization::p, u, q);
    const double dj = stack.atom_layer_thickness();
    if (std::isfinite(dj)) {
        const double b =
            std::sqrt(u * u / (speed_of_light * speed_of_light) + q * q);
        const double damp = std::exp(-2.0 * b * dj);
        set.Ds = 1.0 - set.rs_minus * set.rs_plus * damp;
        set.Dp = 1.0 - set.rp_minus * set.rp_plus * damp;
    } else {
        set.Ds = 1.0;
        set.Dp = 1.0;
    }
    return set;
}

double q_from_b(double u, double b) {
    const double k = u / speed_of_light;
    const double q2 = b * b - k * k;
    if (q2 < 0.0) {
        if (q2 < -1e-12 * b * b)
            throw std::invalid_argument("b must be >= u/c in the vacuum layer");
        return 0.0;
    }
    return std::sqrt(q2);
}

double reflection_recursive_b(const LayerStack& stack, Side side,
                              Polarization pol, double u, double b) {
    return reflection_recursive(stack, side, pol, u, q_from_b(u, b));
}

ReflectionSet reflections_b(const LayerStack& stack, double u, double b) {
    return reflections(stack, u, q_from_b(u, b));
}

}  // namespace cpforge
