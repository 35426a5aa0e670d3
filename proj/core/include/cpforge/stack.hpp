#pragma once

#include <vector>

#include "cpforge/material.hpp"

namespace cpforge {

enum class Polarization { s, p };
enum class Side { minus, plus };

struct Layer {
    Material material;
    double thickness;  // meters; +inf for the semi-infinite outer layers
};

// Planar multilayer: layers 0..n ordered along +z, the two outermost
// semi-infinite.  The atom sits in layer j, which must be vacuum.  z is
// measured from the left boundary of layer j (for j = n, from the last
// interface).
class LayerStack {
public:
    LayerStack(std::vector<Layer> layers, int atom_layer);

    static LayerStack half_space(const Material& m);
    static LayerStack slab(const Material& m, double thickness);
    static LayerStack cavity(const Material& m, double separation);

    int atom_layer() const { return atom_layer_; }
    int top() const { return static_cast<int>(layers_.size()) - 1; }  // n
    bool atom_in_outer_layer() const { return atom_layer_ == top(); }
    double atom_layer_thickness() const { return layers_[atom_layer_].thickness; }
    const Layer& layer(int l) const { return layers_[l]; }
    std::size_t size() const { return layers_.size(); }

private:
    std::vector<Layer> layers_;
    int atom_layer_;
};

// b_l = sqrt(u^2/c^2 eps(iu) mu(iu) + q^2), the axial decay constant at
// imaginary frequency.
double axial_decay(const Material& m, double u, double q);

// Generalized reflection coefficient of the sub-stack on the given side of
// the atom layer, at imaginary frequency u and transverse wave number q.
// Computed by the outermost-in recursion with r = 0 in the outer layers.
double reflection_recursive(const LayerStack& stack, Side side,
                            Polarization pol, double u, double q);

struct HalfSpaceCoeffs {
    double rs, rp;
};

// Closed forms for a single interface to a half space.
HalfSpaceCoeffs half_space_coefficients(const Material& m, double u, double q);

// Closed tanh forms for a plate of finite thickness d in vacuum.
HalfSpaceCoeffs slab_coefficients(const Material& m, double d, double u, double q);

// Thin-plate linearization of the slab forms (leading order in b_M d).
HalfSpaceCoeffs thin_plate_coefficients(const Material& m, double d, double u,
                                        double q);

struct ReflectionSet {
    double rs_minus, rs_plus;
    double rp_minus, rp_plus;
    double Ds, Dp;  // multiple-reflection denominators of the atom layer
};

// Symmetric planar cavity: two identical half spaces separated by s.
ReflectionSet cavity_coefficients(const Material& m, double separation,
                                  double u, double q);

// All four generalized coefficients plus the D factors for a general stack.
ReflectionSet reflections(const LayerStack& stack, double u, double q);

// (u, b) entry points; b >= u/c is the vacuum axial decay constant.
double q_from_b(double u, double b);
double reflection_recursive_b(const LayerStack& stack, Side side,
                              Polarization pol, double u, double b);
ReflectionSet reflections_b(const LayerStack& stack, double u, double b);

}  // namespace cpforge
