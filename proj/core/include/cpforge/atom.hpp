#pragma once

#include <vector>

namespace cpforge {

struct Transition {
    double frequency;  // omega_k0 > 0 (rad/s)
    double dipole_sq;  // |d_0k|^2 (C^2 m^2)
};

// Atomic level structure seen from the ground state: a set of upward
// transitions with dipole matrix-element magnitudes.  The scalar
// polarizability is the isotropic (spherically averaged) one.
class Atom {
public:
    explicit Atom(std::vector<Transition> transitions);

    // alpha(iu) = (2/3hbar) sum_k omega_k0 |d_0k|^2 / (omega_k0^2 + u^2)
    double polarizability_iu(double u) const;
    double static_polarizability() const { return polarizability_iu(0.0); }

    double min_transition() const;
    double max_transition() const;

    const std::vector<Transition>& transitions() const { return transitions_; }

    // two-level conveniences; `transition()` requires a single transition
    const Transition& transition() const;
    // beta = ref^2 |d|^2 / (3 pi hbar eps0 c^3), the dimensionless dipole
    // strength at reference frequency `ref`
    double strength(double ref) const;

    static Atom two_level(double omega10, double dipole_sq);
    static Atom two_level_strength(double omega10, double beta, double ref);

private:
    std::vector<Transition> transitions_;
};

}  // namespace cpforge
