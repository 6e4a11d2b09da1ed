#include "hcm/lambert.hpp"

#include <cmath>
#include <stdexcept>

namespace hcm {

namespace {

constexpr double kInvE = 0.36787944117144232159;  // 1/e
constexpr double kBoundarySlack = 1e-15;

// Series around the branch point x = -1/e in p = +-sqrt(2(ex+1)); the leading
// terms of the expansion W = -1 + p - p^2/3 + 11 p^3/72 - 43 p^4/540 + ...
// p > 0 selects the principal branch, p < 0 the lower branch.
double branch_point_series(double p) {
    const double c3 = 11.0 / 72.0, c4 = -43.0 / 540.0, c5 = 769.0 / 17280.0;
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (c3 + p * (c4 + p * c5))));
}

// Halley iteration for w*e^w = x from an initial guess.
double halley(double w, double x) {
    for (int i = 0; i < 12; ++i) {
        double ew = std::exp(w);
        double f = w * ew - x;
        double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-14 * (1.0 + std::abs(w))) break;
    }
    return w;
}

}  // namespace

double lambert_w0(double x) {
    if (x < -kInvE - kBoundarySlack) throw std::domain_error("lambert_w0: x < -1/e");
    if (x <= -kInvE) return -1.0;
    if (x == 0.0) return 0.0;

    double q = 2.0 * (std::exp(1.0) * x + 1.0);
    if (q < 0.0) q = 0.0;
    double p = std::sqrt(q);
    if (p < 1e-4) return branch_point_series(p);

    double w;
    if (x < -0.25) {
        w = branch_point_series(p);
    } else if (x < 1.0) {
        // series about 0 as a rough start
        w = x * (1.0 - x + 1.5 * x * x);
    } else {
        double l1 = std::log(x), l2 = std::log(l1 > 1.0 ? l1 : 1.0);
        w = l1 - l2 + (l1 > 1.0 ? l2 / l1 : 0.0);
    }
    return halley(w, x);
}

double lambert_wm1(double x) {
    if (x < -kInvE - kBoundarySlack) throw std::domain_error("lambert_wm1: x < -1/e");
    if (x >= 0.0) throw std::domain_error("lambert_wm1: x must be negative");
    if (x <= -kInvE) return -1.0;

    double q = 2.0 * (std::exp(1.0) * x + 1.0);
    if (q < 0.0) q = 0.0;
    double p = std::sqrt(q);
    if (p < 1e-4) return branch_point_series(-p);

    double w;
    if (x < -0.25) {
        w = branch_point_series(-p);
    } else {
        // near 0^-: W_{-1}(x) ~ log(-x) - log(-log(-x))
        double l1 = std::log(-x), l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    }
    return halley(w, x);
}

double k_function(double y) {
    if (y < 1.0) throw std::domain_error("k_function requires y >= 1");
    return -lambert_wm1(-1.0 / (std::exp(1.0) * y));
}

}  // namespace hcm
