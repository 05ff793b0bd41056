#include "rcm/regression.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rcm {

RegressionResult fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("fit_line: size mismatch");
    const int n = static_cast<int>(x.size());
    if (n < 2) throw std::invalid_argument("fit_line: need at least 2 points");

    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");

    RegressionResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    r.points = n;
    r.x_min = x[0];
    r.x_max = x[0];
    for (int i = 1; i < n; ++i) {
        r.x_min = std::min(r.x_min, x[i]);
        r.x_max = std::max(r.x_max, x[i]);
    }
    if (n > 2) {
        double rss = 0.0;
        for (int i = 0; i < n; ++i) {
            double e = y[i] - (r.intercept + r.slope * x[i]);
            rss += e * e;
        }
        r.std_error = std::sqrt(rss / (n - 2) / sxx);
    }
    return r;
}

RegressionResult fit_loglog(std::span<const double> x, std::span<const double> y) {
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("fit_loglog: inputs must be positive");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    return fit_line(lx, ly);
}

} // namespace rcm
