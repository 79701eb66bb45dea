#pragma once

#include <functional>

namespace multicurve {

struct RootResult {
    double x = 0.0;
    double f = 0.0;
    int iterations = 0;
};

/// Plain bisection on [lo, hi]. Requires f(lo) * f(hi) <= 0 (throws
/// bracketing_error otherwise). Stops when |f| <= tol or the bracket width
/// falls below tol; throws convergence_error carrying the best iterate when
/// max_iter is exceeded.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-12, int max_iter = 200);

/// Bisection with an automatically expanded bracket around `seed`. The half
/// width doubles from `initial_half_width` until f changes sign (at most
/// `max_expansions` doublings).
RootResult find_root_expanding(const std::function<double(double)>& f, double seed,
                               double initial_half_width, double tol = 1e-12, int max_iter = 200,
                               int max_expansions = 16);

} // namespace multicurve
