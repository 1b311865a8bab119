#ifndef TURANLAB_ROOTS_HPP
#define TURANLAB_ROOTS_HPP

#include <complex>
#include <utility>
#include <vector>

#include "turanlab/errors.hpp"

namespace turanlab {

using cdouble = std::complex<double>;

/// Admissible zero locations: the segment [-1,1] or the closed upper
/// half of the unit disk {|z| <= 1, Im z >= 0}.
enum class PolyClass { Segment, HalfDisk };

struct EvalResult {
    cdouble value;
    cdouble d1;
    cdouble d2;
    double log_magnitude; // ln|value|, -inf at a root, never overflows
};

// Monic polynomial held as its root multiset. All inequalities in scope are
// homogeneous in P, so the monic normalization loses no generality, and the
// root form survives heavy clustering (e.g. (1-x^2)^n) that would destroy
// coefficient-based evaluation.
class RootPoly {
  public:
    static RootPoly from_roots(std::vector<cdouble> roots, PolyClass tag);

    int degree() const { return static_cast<int>(roots_.size()); }
    PolyClass poly_class() const { return tag_; }
    const std::vector<cdouble>& roots() const { return roots_; }
    bool all_real() const { return all_real_; }

    EvalResult eval(double x) const;

    // Hot-path variants used by the norm and measure kernels; same product
    // accumulation as eval() without the log.
    double abs_value(double x) const;
    void abs_derivs(double x, double& v, double& p1, double& p2) const;
    double log_abs(double x) const;

    /// Logarithmic derivative P'(x)/P(x) = sum 1/(x - z_k). Overflow-free for
    /// any degree; returns +-inf components when x hits a root exactly.
    cdouble log_deriv(double x) const;

  private:
    RootPoly(std::vector<cdouble> roots, PolyClass tag, bool all_real)
        : roots_(std::move(roots)), tag_(tag), all_real_(all_real) {}

    std::vector<cdouble> roots_;
    std::vector<double> real_roots_; // populated when all_real_
    PolyClass tag_;
    bool all_real_;
};

/// Constructs a validated RootPoly. Roots may sit up to 1e-12 outside the
/// class constraint set (optimizer iterates drift); they are snapped back
/// exactly. Roots are sorted by (Re, Im) so equal multisets are bit-identical.
RootPoly make_root_poly(std::vector<cdouble> roots, PolyClass tag);

namespace detail {
/// Chebyshev extreme points of [-1,1], increasing, endpoints exact.
std::vector<double> cheb_points(int m);
}

enum class SampleFunction { AbsValue, AbsDerivTimesSqrtWeight };

/// Values of |P| or |P'|*sqrt(1-x^2) at m Chebyshev points cos(k*pi/(m-1)),
/// returned in increasing x order. Requires m >= degree + 1.
std::vector<std::pair<double, double>> cheb_sample(const RootPoly& poly, int m,
                                                   SampleFunction f);

} // namespace turanlab

#endif
