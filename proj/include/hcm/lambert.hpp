#pragma once

namespace hcm {

// Principal real branch W0 of the Lambert W function on [-1/e, inf);
// W0(x) * exp(W0(x)) = x with W0 >= -1. Relative error <= 1e-12.
// Throws std::domain_error below -1/e (with 1e-15 slack at the boundary).
double lambert_w0(double x);

// Lower real branch W_{-1} on [-1/e, 0); values <= -1.
double lambert_wm1(double x);

// K(y) = -W_{-1}(-1/(e*y)) for y >= 1. Increasing, K(1) = 1, K(y) ~ log y.
double k_function(double y);

}  // namespace hcm
