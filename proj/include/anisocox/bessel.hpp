#pragma once

namespace anisocox {

/// Modified Bessel function of the second kind K_nu(x) for real order nu >= 0
/// and x > 0. Half-integer orders use the closed-form finite sums; other
/// orders combine the small-argument Temme series with the large-argument
/// continued fraction, followed by forward recurrence in the order.
///
/// x > 700 underflows in double precision and returns 0. x <= 0 throws.
double bessel_k(double nu, double x);

} // namespace anisocox
