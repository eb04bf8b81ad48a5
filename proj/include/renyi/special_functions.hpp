#pragma once

namespace renyi::special {

/// ψ(x) = d/dx ln Γ(x) for x > 0, to about 1e-15 relative (the zero near
/// x = 1.4616 is handled by a local Taylor expansion).
double digamma(double x);

/// ln Γ(x + g) − ln Γ(x) for x > 0, x + g > 0, evaluated without forming
/// either log-gamma value, so it stays accurate when x is huge.
double log_gamma_ratio(double x, double g);

}  // namespace renyi::special
