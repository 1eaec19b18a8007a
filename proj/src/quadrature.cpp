#include "thzsim/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace thzsim::quadrature {

namespace {

// Gauss-Kronrod 15-point nodes and weights on [-1, 1]; the embedded 7-point
// Gauss rule uses the odd-indexed nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;

    for (int i = 0; i < 7; ++i) {
        const double offset = half * kKronrodNodes[i];
        const double sum = f(center - offset) + f(center + offset);
        kronrod += kKronrodWeights[i] * sum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    // Kronrod/Gauss discrepancy as a conservative panel error bound.
    return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_panels) {
    return integrate(f, std::vector<double>{a, b}, abs_tol, max_panels);
}

Result integrate(const std::function<double(double)>& f,
                 const std::vector<double>& breakpoints, double abs_tol,
                 int max_panels) {
    Result out;

    // Global adaptive refinement: repeatedly bisect the panel with the
    // largest error estimate until the total meets the tolerance or the
    // panel budget runs out.
    std::priority_queue<Panel> panels;
    double total_error = 0.0;
    int used = 0;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (breakpoints[i - 1] == breakpoints[i]) continue;
        Panel panel = evaluate(f, breakpoints[i - 1], breakpoints[i]);
        total_error += panel.error;
        panels.push(panel);
        ++used;
    }
    if (panels.empty()) {
        out.converged = true;
        return out;
    }

    while (total_error > abs_tol && used < max_panels) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval no longer splittable in double precision.
            panels.push({worst.a, worst.b, worst.value, 0.0});
            continue;
        }
        const Panel left = evaluate(f, worst.a, mid);
        const Panel right = evaluate(f, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++used;
    }

    out.error_estimate = 0.0;
    while (!panels.empty()) {
        out.value += panels.top().value;
        out.error_estimate += panels.top().error;
        panels.pop();
    }
    out.converged = out.error_estimate <= abs_tol;
    return out;
}

}  // namespace thzsim::quadrature
