#pragma once

namespace windiso {

struct ZetaResult {
    double s = 0.0;
    double value = 0.0;
    /// Analytic truncation bound for the Euler-Maclaurin tail, always
    /// <= 1e-12 by choice of the cutoff. Floating round-off in the partial
    /// sum is separate and orders of magnitude smaller at desk scale.
    double abs_error_bound = 0.0;
};

/// Riemann zeta on (1, infinity) by Euler-Maclaurin summation with Bernoulli
/// corrections through B6 and an explicit remainder bound. Throws a domain
/// error for s <= 1 + 1e-6: an argument that close to the pole signals a
/// sweep q within the guard band of 2/p.
ZetaResult zeta(double s);

}  // namespace windiso
