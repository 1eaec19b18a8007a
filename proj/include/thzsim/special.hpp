#ifndef THZSIM_SPECIAL_HPP
#define THZSIM_SPECIAL_HPP

namespace thzsim::special {

// Gaussian tail probability Q(x) = P(N(0,1) > x), from erfc.
double q_function(double x);

// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s).
double regularized_gamma_p(double s, double x);

// Lower incomplete gamma(s, x). Overflows to +inf for s beyond ~170;
// use log_lower_incomplete_gamma there.
double lower_incomplete_gamma(double s, double x);

// ln gamma(s, x), finite for shapes up to 1e4 and beyond.
double log_lower_incomplete_gamma(double s, double x);

}  // namespace thzsim::special

#endif
