#pragma once

#include <functional>

namespace cpforge::quad {

// Tolerances and limits shared by all integrators.  exp_cutoff is the
// truncation point for exponentially weighted semi-infinite integrals
// (e^{-40} ~ 4e-18, below double accumulation noise).
struct Spec {
    double rel_tol = 1e-8;
    double abs_floor = 0.0;
    int max_subdivisions = 2000;
    double exp_cutoff = 40.0;

    Spec() = default;
    Spec(double rel, double floor, int subdivisions)
        : rel_tol(rel), abs_floor(floor), max_subdivisions(subdivisions) {}
};

struct Result {
    double value = 0.0;
    double error = 0.0;  // absolute error estimate
    long evaluations = 0;
    bool converged = true;

    Result& operator+=(const Result& other) {
        value += other.value;
        error += other.error;
        evaluations += other.evaluations;
        converged = converged && other.converged;
        return *this;
    }
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7/15 on a finite interval.  Deterministic: the
// subdivision order depends only on the integrand values.
Result integrate(const Integrand& f, double a, double b, const Spec& spec);

// integral over (a, inf) via the rational map t = a + scale*x/(1-x).
// The integrand must decay (exponentially or with a power > 1).
Result integrate_semi_infinite(const Integrand& f, double a, const Spec& spec,
                               double scale = 1.0);

// PV int_a^b g(w)/(pole - w) dw by symmetric pole subtraction on
// [pole-window, pole+window] plus the analytic log remainder and the
// regular tails.  b may be +inf.  A pole outside (a, b) degrades to
// plain integration.
Result principal_value(const Integrand& g, double pole, double a, double b,
                       double window, const Spec& spec);

namespace detail {

// Sums adaptive panels of fixed length starting at a until several
// consecutive panels are negligible.  For absolutely convergent tails with
// slowly decaying oscillatory integrands (Sommerfeld tails).
Result integrate_decaying_tail(const Integrand& f, double a, double segment,
                               const Spec& spec);

}  // namespace detail

}  // namespace cpforge::quad
