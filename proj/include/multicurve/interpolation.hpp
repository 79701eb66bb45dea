#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace multicurve {

/// Interpolation schemes for zero curves. All of them extrapolate the zero
/// rate flat outside the knot range.
enum class InterpMethod { LINEAR_ON_YIELD, LINEAR_ON_LOG_DF, NATURAL_CUBIC_ON_YIELD };

InterpMethod interp_from_string(std::string_view name);
std::string to_string(InterpMethod m);

/// Per-interval cubic coefficients a + b*(x-x_i) + c*(x-x_i)^2 + d*(x-x_i)^3
/// for a natural spline (second derivative zero at both end knots).
struct SplineCoefficients {
    std::vector<double> x; // knot abscissae, size n+1
    std::vector<double> a; // size n
    std::vector<double> b;
    std::vector<double> c; // includes the trailing c_{n+1}, size n+1
    std::vector<double> d;

    std::size_t intervals() const { return a.size(); }
    double evaluate(double t) const;              // flat outside [x.front(), x.back()]
    double second_derivative(double t) const;     // 2c + 6d(t - x_i)
    std::size_t interval_index(double t) const;
};

/// Fits the natural cubic spline through (x_i, y_i) by the tridiagonal
/// forward-elimination / back-substitution solve. Needs >= 2 strictly
/// increasing knots; two knots degenerate to the straight line.
SplineCoefficients fit_natural_cubic(std::span<const double> x, std::span<const double> y);

/// One interpolated value under `method` for knot set (x, y); fits on demand.
/// For LINEAR_ON_LOG_DF the knot ordinates are zero rates; the interpolation
/// runs on y_i * x_i (the negated log discount) and flat zero-rate
/// extrapolation applies outside the knots.
double interpolate(InterpMethod method, std::span<const double> x, std::span<const double> y,
                   double t);

/// Reusable fitted interpolant (the hot path evaluates thousands of times).
class Interpolant {
public:
    Interpolant() = default;
    Interpolant(InterpMethod method, std::vector<double> x, std::vector<double> y);

    double operator()(double t) const;
    InterpMethod method() const { return method_; }
    const std::vector<double>& knots_x() const { return x_; }
    const std::vector<double>& knots_y() const { return y_; }

private:
    InterpMethod method_ = InterpMethod::NATURAL_CUBIC_ON_YIELD;
    std::vector<double> x_, y_;
    std::vector<double> w_; // transformed ordinates for LINEAR_ON_LOG_DF
    SplineCoefficients spline_;
};

} // namespace multicurve
