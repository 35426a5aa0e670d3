#pragma once

#include <functional>
#include <vector>

#include "cpforge/atom.hpp"
#include "cpforge/quadrature.hpp"
#include "cpforge/stack.hpp"

namespace cpforge {

struct PotentialSample {
    double z = 0.0;      // m, measured inside the atom layer
    double U = 0.0;      // J
    double F = 0.0;      // N, -dU/dz
    double error = 0.0;  // quadrature error estimate on U
    bool converged = true;
};

struct PotentialCurve {
    std::vector<PotentialSample> samples;
    bool converged() const {
        for (const auto& s : samples)
            if (!s.converged) return false;
        return true;
    }
};

// scalar polarizability on the imaginary axis, alpha(iu)
using PolarizabilityFn = std::function<double(double)>;

// Ground-state vdW potential U(z) of an atom in the (vacuum) layer j of a
// multilayer stack: double integral over imaginary frequency u and the
// vacuum axial wave number b, with the inner integral mapped to an
// exponentially weighted finite window.
//
// The engine takes the polarizability as a callable so the dynamics module
// can substitute broadened spectra; omega_scale sets the rational map of
// the u integral (max of atomic and medium resonances for the plain atom).
quad::Result potential_energy(const LayerStack& stack,
                              const PolarizabilityFn& alpha,
                              double omega_scale, double z,
                              const quad::Spec& spec);

// Samples with force from a 5-point stencil (h = min(z, d_j - z)/100).
PotentialSample potential_outside(const LayerStack& stack, const Atom& atom,
                                  double z, const quad::Spec& spec);
PotentialSample potential_in_cavity(const LayerStack& stack, const Atom& atom,
                                    double z, const quad::Spec& spec);
// dispatches on the atom layer position
PotentialSample potential_sample(const LayerStack& stack, const Atom& atom,
                                 double z, const quad::Spec& spec);

PotentialCurve sample_curve(const LayerStack& stack, const Atom& atom,
                            const std::vector<double>& z_grid,
                            const quad::Spec& spec, int threads = 1);

// u-integral scale used for the atom's own polarizability
double default_omega_scale(const LayerStack& stack, const Atom& atom);

}  // namespace cpforge
