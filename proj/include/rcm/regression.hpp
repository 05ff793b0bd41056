#ifndef RCM_REGRESSION_HPP
#define RCM_REGRESSION_HPP

#include <span>

namespace rcm {

/// Ordinary least-squares line fit, used for every exponent read-off.
struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double std_error = 0.0; // standard error of the slope
    double x_min = 0.0;
    double x_max = 0.0;
    int points = 0;
};

RegressionResult fit_line(std::span<const double> x, std::span<const double> y);

/// Fit on (log x, log y). All inputs must be positive.
RegressionResult fit_loglog(std::span<const double> x, std::span<const double> y);

} // namespace rcm

#endif
