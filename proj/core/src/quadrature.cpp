#include "cpforge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace cpforge::quad {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (odd entries form the embedded
// 7-point Gauss rule).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    double resabs;  // integral of |f| over the panel
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const {
        return x.error < y.error;
    }
};

Panel gk15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    fv[7] = f(center);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv[j] = f(center - dx);
        fv[14 - j] = f(center + dx);
    }

    double kronrod = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int j = 0; j < 7; ++j) {
        kronrod += kWgk[j] * (fv[j] + fv[14 - j]);
        if (j % 2 == 1) gauss += kWg[j / 2] * (fv[j] + fv[14 - j]);
    }
    kronrod *= half;
    gauss *= half;

    // QUADPACK-style sharpened error estimate.
    double resabs = 0.0;
    for (int j = 0; j < 7; ++j) resabs += kWgk[j] * (std::fabs(fv[j]) + std::fabs(fv[14 - j]));
    resabs = (resabs + kWgk[7] * std::fabs(fv[7])) * std::fabs(half);
    double err = std::fabs(kronrod - gauss);
    if (resabs > 0.0 && err > 0.0) {
        const double scaled = std::pow(200.0 * err / resabs, 1.5);
        if (scaled < 1.0) err = resabs * scaled;
    }
    return Panel{a, b, kronrod, err, resabs};
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Spec& spec) {
    Result out;
    if (a == b) return out;

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    Panel first = gk15(f, a, b);
    out.evaluations = 15;
    double total = first.value;
    double toterr = first.error;
    double totabs = first.resabs;
    heap.push(first);

    // Cancellation floor relative to the absolute integral mass, so that
    // near-zero totals of large oscillating integrands terminate.
    auto target = [&] {
        return std::max({spec.rel_tol * std::fabs(total),
                         0.1 * spec.rel_tol * totabs, spec.abs_floor});
    };

    int splits = 0;
    while (toterr > target() && splits < spec.max_subdivisions) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval exhausted at machine precision
            heap.push(worst);
            break;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        totabs += left.resabs + right.resabs - worst.resabs;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    out.value = total;
    out.error = toterr;
    out.converged = toterr <= target();
    if (!std::isfinite(total) || !std::isfinite(toterr)) out.converged = false;
    return out;
}

Result integrate_semi_infinite(const Integrand& f, double a, const Spec& spec,
                               double scale) {
    auto mapped = [&](double x) {
        const double om = 1.0 - x;
        const double t = a + scale * x / om;
        if (!std::isfinite(t)) return 0.0;
        const double value = f(t) * scale / (om * om);
        return std::isfinite(value) ? value : 0.0;
    };
    return integrate(mapped, 0.0, 1.0, spec);
}

Result principal_value(const Integrand& g, double pole, double a, double b,
                       double window, const Spec& spec) {
    Result out;
    const bool infinite_b = std::isinf(b);

    auto plain = [&](double lo, double hi) {
        auto weighted = [&](double w) { return g(w) / (pole - w); };
        if (std::isinf(hi)) return integrate_semi_infinite(weighted, lo, spec, std::max(std::fabs(pole), 1.0));
        return integrate(weighted, lo, hi, spec);
    };

    if (!(pole > a) || (!infinite_b && !(pole < b))) {
        return plain(a, infinite_b ? b : b);
    }

    double lo = std::max(a, pole - window);
    double hi = infinite_b ? pole + window : std::min(b, pole + window);

    const double gp = g(pole);
    const double h = 1e-5 * window;
    const double gprime = (g(pole + h) - g(pole - h)) / (2.0 * h);
    out.evaluations += 3;

    auto subtracted = [&](double w) {
        const double d = pole - w;
        if (std::fabs(d) < 1e-9 * window) return -gprime;
        return (g(w) - gp) / d;
    };

    out += integrate(subtracted, lo, hi, spec);
    // analytic remainder of the constant term; zero for a symmetric window
    if (gp != 0.0) out.value += gp * std::log(std::fabs((pole - lo) / (hi - pole)));

    if (lo > a) out += plain(a, lo);
    if (infinite_b || hi < b) out += plain(hi, infinite_b ? b : b);
    return out;
}

namespace detail {

Result integrate_decaying_tail(const Integrand& f, double a, double segment,
                               const Spec& spec) {
    Result out;
    double left = a;
    double abs_scale = 0.0;  // sum of |segment| values, the cancellation scale
    int quiet = 0;
    const int max_segments = 4 * spec.max_subdivisions;
    for (int k = 0; k < max_segments; ++k) {
        Result piece = integrate(f, left, left + segment, spec);
        out += piece;
        abs_scale += std::fabs(piece.value);
        left += segment;
        const double tol = std::max(spec.rel_tol * abs_scale, spec.abs_floor);
        if (std::fabs(piece.value) + piece.error < std::max(tol, 1e-300)) {
            if (++quiet >= 3) return out;
        } else {
            quiet = 0;
        }
    }
    out.converged = false;
    return out;
}

}  // namespace detail

}  // namespace cpforge::quad
