#include "multicurve/root_finding.hpp"

#include <cmath>

#include "multicurve/errors.hpp"

namespace multicurve {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                     int max_iter) {
    if (lo > hi) std::swap(lo, hi);
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if (flo * fhi > 0.0) throw bracketing_error("find_root: no sign change on bracket");

    double mid = lo, fmid = flo;
    for (int it = 1; it <= max_iter; ++it) {
        mid = 0.5 * (lo + hi);
        fmid = f(mid);
        if (std::abs(fmid) <= tol || (hi - lo) * 0.5 <= tol) return {mid, fmid, it};
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    throw convergence_error("find_root: max iterations exceeded", mid);
}

RootResult find_root_expanding(const std::function<double(double)>& f, double seed,
                               double initial_half_width, double tol, int max_iter,
                               int max_expansions) {
    double w = initial_half_width;
    const double fseed = f(seed);
    if (fseed == 0.0) return {seed, 0.0, 0};
    for (int k = 0; k < max_expansions; ++k, w *= 2.0) {
        const double lo = seed - w;
        const double hi = seed + w;
        if (f(lo) * fseed <= 0.0) return find_root(f, lo, seed, tol, max_iter);
        if (f(hi) * fseed <= 0.0) return find_root(f, seed, hi, tol, max_iter);
    }
    throw bracketing_error("find_root_expanding: no sign change after bracket expansion");
}

} // namespace multicurve
