#include "cpforge/atom.hpp"

#include <algorithm>
#include <stdexcept>

#include "cpforge/constants.hpp"

namespace cpforge {

using namespace constants;

Atom::Atom(std::vector<Transition> transitions)
    : transitions_(std::move(transitions)) {
    if (transitions_.empty())
        throw std::invalid_argument("atom needs at least one transition");
    for (const auto& t : transitions_) {
        if (!(t.frequency > 0.0))
            throw std::invalid_argument("transition frequency must be > 0");
        if (!(t.dipole_sq > 0.0))
            throw std::invalid_argument("dipole matrix element must be > 0");
    }
}

double Atom::polarizability_iu(double u) const {
    double alpha = 0.0;
    for (const auto& t : transitions_)
        alpha += t.frequency * t.dipole_sq / (t.frequency * t.frequency + u * u);
    return 2.0 / (3.0 * hbar) * alpha;
}

double Atom::min_transition() const {
    return std::min_element(transitions_.begin(), transitions_.end(),
                            [](const Transition& a, const Transition& b) {
                                return a.frequency < b.frequency;
                            })
        ->frequency;
}

double Atom::max_transition() const {
    return std::max_element(transitions_.begin(), transitions_.end(),
                            [](const Transition& a, const Transition& b) {
                                return a.frequency < b.frequency;
                            })
        ->frequency;
}

const Transition& Atom::transition() const {
    if (transitions_.size() != 1)
        throw std::logic_error("operation requires a two-level atom");
    return transitions_.front();
}

double Atom::strength(double ref) const {
    const auto& t = transition();
    return ref * ref * t.dipole_sq /
           (3.0 * pi * hbar * epsilon0 * speed_of_light * speed_of_light *
            speed_of_light);
}

Atom Atom::two_level(double omega10, double dipole_sq) {
    return Atom({Transition{omega10, dipole_sq}});
}

Atom Atom::two_level_strength(double omega10, double beta, double ref) {
    if (!(beta > 0.0)) throw std::invalid_argument("dipole strength must be > 0");
    const double c3 = speed_of_light * speed_of_light * speed_of_light;
    const double dipole_sq = 3.0 * pi * hbar * epsilon0 * c3 * beta / (ref * ref);
    return two_level(omega10, dipole_sq);
}

}  // namespace cpforge
