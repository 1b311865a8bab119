#ifndef TURANLAB_NORMS_HPP
#define TURANLAB_NORMS_HPP

#include <functional>
#include <limits>

#include "turanlab/roots.hpp"

namespace turanlab {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Weight {
    None,
    SqrtOneMinusX2, // sqrt(1-x^2)
    OneMinusX2,     // (1-x^2)
    Tyrygin         // (1-x^2)^((p-1)/(2p)), needs 1 <= p < inf
};

struct NormSpec {
    double p = kInfinity;            // exponent in (0, inf]
    Weight weight = Weight::None;
    int deriv_order = 0;             // 0, 1 or 2
};

struct NormValue {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int panels_used = 0;
};

/// (int_{-1}^{1} |f|^p dx)^{1/p} for finite p, where f is the chosen
/// derivative of P times the chosen weight. The domain is split at the real
/// parts of the roots before adaptive panel quadrature, so the fractional
/// kinks of |f|^p sit on panel edges.
NormValue lp_norm(const RootPoly& poly, const NormSpec& spec);

/// max over [-1,1] of |f|: dense Chebyshev sampling plus golden-section
/// refinement of every bracketed local maximum (endpoints always candidates).
NormValue sup_norm(const RootPoly& poly, const NormSpec& spec);

/// Dispatch on finite/infinite p.
NormValue norm(const RootPoly& poly, const NormSpec& spec);

double weight_value(Weight w, double p, double x);

namespace detail {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int panels = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod 15(7) on [a,b] with fixed interior
/// breakpoints; splits the worst panel until the summed error estimate is
/// below max(rel_tol*|I|, abs_tol) or the depth cap is hit. Exposed for
/// direct engine tests.
QuadResult adaptive_gk15(const std::function<double(double)>& f, double a,
                         double b, const std::vector<double>& breakpoints,
                         double rel_tol, double abs_tol, int max_depth);

} // namespace detail

} // namespace turanlab

#endif
