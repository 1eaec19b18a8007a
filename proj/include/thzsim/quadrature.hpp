#ifndef THZSIM_QUADRATURE_HPP
#define THZSIM_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <vector>

namespace thzsim::quadrature {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b] to an absolute
// tolerance, bisecting the worst panel first up to a panel budget.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_panels = 4000);

// Same, but seeded with the panels between consecutive breakpoints. Useful
// for integrands whose support is a narrow spike a single coarse panel would
// step over entirely.
Result integrate(const std::function<double(double)>& f,
                 const std::vector<double>& breakpoints, double abs_tol,
                 int max_panels = 4000);

}  // namespace thzsim::quadrature

#endif
