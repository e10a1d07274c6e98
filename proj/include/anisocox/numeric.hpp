#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace anisocox {

/// Adaptive Simpson quadrature of f on [a, b]. Tolerance is absolute plus
/// relative against the running estimate.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10, int max_depth = 40);

/// Trapezoid rule on regularly spaced nodes.
double trapezoid(std::span<const double> x, std::span<const double> y);

/// Root of a monotone decreasing function on [lo, hi] by bisection.
/// Requires f(lo) >= 0 >= f(hi).
double bisect_decreasing(const std::function<double(double)>& f, double lo, double hi,
                         double tol = 1e-12, int max_iter = 200);

struct NelderMeadOptions {
    int max_iter = 400;
    double f_tol = 1e-10;
    double initial_step = 0.5;
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    int iterations = 0;
};

/// Downhill simplex minimizer in unconstrained coordinates. Bounds are the
/// caller's business (fold/transform inside the objective).
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, const NelderMeadOptions& opts = {});

/// Triangular fold of u into [lo, hi]; identity inside, reflection outside.
double fold_into(double u, double lo, double hi);

// Basic sample statistics. All throw on empty input except sample_sd, which
// returns NaN for n < 2 (matching the MC table conventions).
double sample_mean(std::span<const double> v);
double sample_sd(std::span<const double> v);
double sample_median(std::vector<double> v);
/// Linear-interpolation quantile (type 7), q in [0, 1].
double sample_quantile(std::vector<double> v, double q);

/// Runs fn(i) for i in [0, n) on `workers` threads (0 = hardware concurrency).
/// Exceptions from workers are rethrown on the caller thread.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

int default_workers();

} // namespace anisocox
