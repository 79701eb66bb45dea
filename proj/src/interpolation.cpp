#include "multicurve/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "multicurve/errors.hpp"

namespace multicurve {

InterpMethod interp_from_string(std::string_view name) {
    if (name == "linear_on_yield" || name == "LINEAR_ON_YIELD") return InterpMethod::LINEAR_ON_YIELD;
    if (name == "linear_on_log_df" || name == "LINEAR_ON_LOG_DF")
        return InterpMethod::LINEAR_ON_LOG_DF;
    if (name == "natural_cubic_on_yield" || name == "NATURAL_CUBIC_ON_YIELD" ||
        name == "natural_cubic")
        return InterpMethod::NATURAL_CUBIC_ON_YIELD;
    throw input_error("unknown interpolation method '" + std::string(name) + "'");
}

std::string to_string(InterpMethod m) {
    switch (m) {
    case InterpMethod::LINEAR_ON_YIELD: return "linear_on_yield";
    case InterpMethod::LINEAR_ON_LOG_DF: return "linear_on_log_df";
    case InterpMethod::NATURAL_CUBIC_ON_YIELD: return "natural_cubic_on_yield";
    }
    return "?";
}

std::size_t SplineCoefficients::interval_index(double t) const {
    // Largest i with x[i] <= t, clamped to the last interval.
    const auto it = std::upper_bound(x.begin(), x.end(), t);
    if (it == x.begin()) return 0;
    const std::size_t idx = static_cast<std::size_t>(it - x.begin()) - 1;
    return std::min(idx, intervals() - 1);
}

double SplineCoefficients::evaluate(double t) const {
    if (t <= x.front()) return a.front();
    if (t >= x.back()) {
        const std::size_t n = intervals() - 1;
        const double h = x[n + 1] - x[n];
        return a[n] + b[n] * h + c[n] * h * h + d[n] * h * h * h;
    }
    const std::size_t i = interval_index(t);
    const double s = t - x[i];
    return a[i] + s * (b[i] + s * (c[i] + s * d[i]));
}

double SplineCoefficients::second_derivative(double t) const {
    if (t < x.front() || t > x.back()) return 0.0;
    std::size_t i = interval_index(t);
    if (t == x.back()) i = intervals() - 1;
    const double s = t - x[i];
    return 2.0 * c[i] + 6.0 * d[i] * s;
}

SplineCoefficients fit_natural_cubic(std::span<const double> x, std::span<const double> y) {
    const std::size_t m = x.size();
    if (m < 2) throw input_error("fit_natural_cubic: need at least 2 knots");
    if (y.size() != m) throw input_error("fit_natural_cubic: x/y size mismatch");
    for (std::size_t i = 1; i < m; ++i)
        if (!(x[i] > x[i - 1]))
            throw input_error("fit_natural_cubic: knot abscissae must be strictly increasing");

    const std::size_t n = m - 1; // intervals
    SplineCoefficients sc;
    sc.x.assign(x.begin(), x.end());
    sc.a.assign(y.begin(), y.end() - 1);
    sc.b.assign(n, 0.0);
    sc.c.assign(n + 1, 0.0);
    sc.d.assign(n, 0.0);

    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = x[i + 1] - x[i];

    if (n == 1) {
        sc.b[0] = (y[1] - y[0]) / h[0];
        return sc;
    }

    // Tridiagonal system in the c's: h_{i-1} c_{i-1} + 2(h_{i-1}+h_i) c_i + h_i c_{i+1} = rhs_i,
    // natural boundaries c_0 = c_n = 0. The diagonal strictly dominates for any
    // valid spacing, so the plain forward elimination below never pivots.
    std::vector<double> rhs(n + 1, 0.0), l(n + 1, 0.0), mu(n + 1, 0.0), z(n + 1, 0.0);
    for (std::size_t i = 1; i < n; ++i)
        rhs[i] = 3.0 * (y[i + 1] - y[i]) / h[i] - 3.0 * (y[i] - y[i - 1]) / h[i - 1];

    l[0] = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        l[i] = 2.0 * (x[i + 1] - x[i - 1]) - h[i - 1] * mu[i - 1];
        mu[i] = h[i] / l[i];
        z[i] = (rhs[i] - h[i - 1] * z[i - 1]) / l[i];
    }
    sc.c[n] = 0.0;
    for (std::size_t j = n; j-- > 0;) {
        sc.c[j] = z[j] - mu[j] * sc.c[j + 1];
        sc.b[j] = (y[j + 1] - y[j]) / h[j] - h[j] * (sc.c[j + 1] + 2.0 * sc.c[j]) / 3.0;
        sc.d[j] = (sc.c[j + 1] - sc.c[j]) / (3.0 * h[j]);
    }
    return sc;
}

namespace {

double linear_eval(std::span<const double> x, std::span<const double> y, double t) {
    if (t <= x.front()) return y.front();
    if (t >= x.back()) return y.back();
    const auto it = std::upper_bound(x.begin(), x.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    const double w = (t - x[i]) / (x[i + 1] - x[i]);
    return y[i] + w * (y[i + 1] - y[i]);
}

// LINEAR_ON_LOG_DF stores zero rates but interpolates y_i * x_i (= -log df).
// The implied zero w(t)/t is kept flat outside the knots.
double log_df_eval(std::span<const double> x, std::span<const double> w,
                   std::span<const double> zeros, double t) {
    if (t <= x.front()) return zeros.front();
    if (t >= x.back()) return zeros.back();
    return linear_eval(x, w, t) / t;
}

std::vector<double> log_df_transform(std::span<const double> x, std::span<const double> y) {
    std::vector<double> w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) w[i] = y[i] * x[i];
    return w;
}

} // namespace

double interpolate(InterpMethod method, std::span<const double> x, std::span<const double> y,
                   double t) {
    if (x.empty() || x.size() != y.size()) throw input_error("interpolate: bad knot set");
    if (x.size() == 1) return y.front();
    switch (method) {
    case InterpMethod::LINEAR_ON_YIELD:
        return linear_eval(x, y, t);
    case InterpMethod::LINEAR_ON_LOG_DF: {
        const auto w = log_df_transform(x, y);
        return log_df_eval(x, w, y, t);
    }
    case InterpMethod::NATURAL_CUBIC_ON_YIELD:
        return fit_natural_cubic(x, y).evaluate(t);
    }
    throw input_error("interpolate: bad method");
}

Interpolant::Interpolant(InterpMethod method, std::vector<double> x, std::vector<double> y)
    : method_(method), x_(std::move(x)), y_(std::move(y)) {
    if (x_.empty() || x_.size() != y_.size()) throw input_error("Interpolant: bad knot set");
    for (std::size_t i = 1; i < x_.size(); ++i)
        if (!(x_[i] > x_[i - 1])) throw input_error("Interpolant: knots must be strictly increasing");
    if (x_.size() == 1) return;
    switch (method_) {
    case InterpMethod::LINEAR_ON_YIELD: break;
    case InterpMethod::LINEAR_ON_LOG_DF: w_ = log_df_transform(x_, y_); break;
    case InterpMethod::NATURAL_CUBIC_ON_YIELD: spline_ = fit_natural_cubic(x_, y_); break;
    }
}

double Interpolant::operator()(double t) const {
    if (x_.size() == 1) return y_.front();
    switch (method_) {
    case InterpMethod::LINEAR_ON_YIELD: return linear_eval(x_, y_, t);
    case InterpMethod::LINEAR_ON_LOG_DF: return log_df_eval(x_, w_, y_, t);
    case InterpMethod::NATURAL_CUBIC_ON_YIELD: return spline_.evaluate(t);
    }
    return 0.0;
}

} // namespace multicurve
