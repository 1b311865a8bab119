#include "turanlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace turanlab {

namespace {

constexpr double kSnapTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// One pass over the roots, two-pointer from both ends. Pairing the sorted
// multiset this way makes the accumulated value bit-exactly symmetric under
// x -> -x whenever the root multiset is symmetric about 0 (each pair factor
// (x-z_i)(x-z_j) maps to itself up to an exact sign), and halves the number
// of product steps. Derivatives follow the product rule through each
// quadratic factor u = (x-z_i)(x-z_j): u' = t_i + t_j, u'' = 2.
template <typename T, typename Root>
void accumulate(const Root* roots, int n, double x, T& v, T& d1, T& d2) {
    v = T(1);
    d1 = T(0);
    d2 = T(0);
    int i = 0, j = n - 1;
    while (i < j) {
        const T tl = x - roots[i];
        const T th = x - roots[j];
        const T u = tl * th;
        const T du = tl + th;
        d2 = d2 * u + 2.0 * d1 * du + 2.0 * v;
        d1 = d1 * u + v * du;
        v = v * u;
        ++i;
        --j;
    }
    if (i == j) {
        const T t = x - roots[i];
        d2 = d2 * t + 2.0 * d1;
        d1 = d1 * t + v;
        v = v * t;
    }
}

template <typename T, typename Root>
T accumulate_value(const Root* roots, int n, double x) {
    T v(1);
    int i = 0, j = n - 1;
    while (i < j) {
        v = v * ((x - roots[i]) * (x - roots[j]));
        ++i;
        --j;
    }
    if (i == j) v = v * T(x - roots[i]);
    return v;
}

} // namespace

RootPoly make_root_poly(std::vector<cdouble> roots, PolyClass tag) {
    return RootPoly::from_roots(std::move(roots), tag);
}

RootPoly RootPoly::from_roots(std::vector<cdouble> roots, PolyClass tag) {
    if (roots.empty()) throw EmptyRoots();

    for (auto& z : roots) {
        if (tag == PolyClass::Segment) {
            if (std::abs(z.imag()) > kSnapTol)
                throw RootOutOfClass("segment root has nonzero imaginary part");
            if (z.real() < -1.0 - kSnapTol || z.real() > 1.0 + kSnapTol)
                throw RootOutOfClass("segment root outside [-1,1]");
            z = cdouble(std::clamp(z.real(), -1.0, 1.0), 0.0);
        } else {
            if (z.imag() < -kSnapTol)
                throw RootOutOfClass("half-disk root below the real axis");
            if (std::abs(z) > 1.0 + kSnapTol)
                throw RootOutOfClass("half-disk root outside the unit disk");
            z = cdouble(z.real(), std::max(z.imag(), 0.0));
            double r = std::abs(z);
            if (r > 1.0) {
                z /= r;
                while (std::abs(z) > 1.0)
                    z *= (1.0 - std::numeric_limits<double>::epsilon());
            }
        }
    }

    std::sort(roots.begin(), roots.end(), [](const cdouble& a, const cdouble& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    bool all_real = true;
    for (const auto& z : roots)
        if (z.imag() != 0.0) {
            all_real = false;
            break;
        }

    RootPoly p(std::move(roots), tag, all_real);
    if (all_real) {
        p.real_roots_.reserve(p.roots_.size());
        for (const auto& z : p.roots_) p.real_roots_.push_back(z.real());
    }
    return p;
}

EvalResult RootPoly::eval(double x) const {
    EvalResult r{};
    if (all_real_) {
        double v, d1, d2;
        accumulate(real_roots_.data(), degree(), x, v, d1, d2);
        r.value = v;
        r.d1 = d1;
        r.d2 = d2;
    } else {
        accumulate(roots_.data(), degree(), x, r.value, r.d1, r.d2);
    }
    r.log_magnitude = log_abs(x);
    return r;
}

double RootPoly::abs_value(double x) const {
    if (all_real_)
        return std::abs(accumulate_value<double>(real_roots_.data(), degree(), x));
    return std::abs(accumulate_value<cdouble>(roots_.data(), degree(), x));
}

void RootPoly::abs_derivs(double x, double& v, double& p1, double& p2) const {
    if (all_real_) {
        double a, b, c;
        accumulate(real_roots_.data(), degree(), x, a, b, c);
        v = std::abs(a);
        p1 = std::abs(b);
        p2 = std::abs(c);
    } else {
        cdouble a, b, c;
        accumulate(roots_.data(), degree(), x, a, b, c);
        v = std::abs(a);
        p1 = std::abs(b);
        p2 = std::abs(c);
    }
}

double RootPoly::log_abs(double x) const {
    // Fast path: direct product, as long as it stays comfortably inside the
    // normal double range. Otherwise fall back to the summed-log form, which
    // is finite for any degree (the n <= 10000 no-overflow guarantee).
    const int n = degree();
    if (n <= 200) {
        double mag;
        bool ok = true;
        if (all_real_) {
            double v = 1.0;
            int i = 0, j = n - 1;
            while (i <= j) {
                v *= (i == j) ? (x - real_roots_[i])
                              : (x - real_roots_[i]) * (x - real_roots_[j]);
                ++i;
                --j;
                const double a = std::fabs(v);
                if (a < 1e-280 || a > 1e280) {
                    ok = false;
                    break;
                }
            }
            mag = std::fabs(v);
        } else {
            cdouble v(1.0, 0.0);
            int i = 0, j = n - 1;
            while (i <= j) {
                v *= (i == j) ? cdouble(x - roots_[i])
                              : (x - roots_[i]) * (x - roots_[j]);
                ++i;
                --j;
                const double a = std::abs(v);
                if (a < 1e-280 || a > 1e280) {
                    ok = false;
                    break;
                }
            }
            mag = std::abs(v);
        }
        if (ok) return mag > 0.0 ? std::log(mag) : -kInf;
    }
    double sum = 0.0;
    for (const auto& z : roots_) {
        const double d = std::abs(x - z);
        if (d == 0.0) return -kInf;
        sum += std::log(d);
    }
    return sum;
}

cdouble RootPoly::log_deriv(double x) const {
    if (all_real_) {
        double s = 0.0;
        for (double r : real_roots_) s += 1.0 / (x - r);
        return cdouble(s, 0.0);
    }
    cdouble s(0.0, 0.0);
    for (const auto& z : roots_) s += 1.0 / (x - z);
    return s;
}

namespace detail {

// Chebyshev extreme points of [-1,1] in increasing order. The sine form makes
// the grid exactly symmetric (midpoint exactly 0 for odd m, endpoints +-1).
std::vector<double> cheb_points(int m) {
    std::vector<double> xs(m);
    for (int k = 0; k < m; ++k)
        xs[k] = std::sin(M_PI * (2.0 * k - (m - 1)) / (2.0 * (m - 1)));
    return xs;
}

} // namespace detail

std::vector<std::pair<double, double>> cheb_sample(const RootPoly& poly, int m,
                                                   SampleFunction f) {
    if (m < poly.degree() + 1)
        throw ParamOutOfRange("cheb_sample requires m >= degree + 1");
    auto xs = detail::cheb_points(m);
    std::vector<std::pair<double, double>> out;
    out.reserve(m);
    for (double x : xs) {
        double val;
        if (f == SampleFunction::AbsValue) {
            val = poly.abs_value(x);
        } else {
            double v, p1, p2;
            poly.abs_derivs(x, v, p1, p2);
            val = p1 * std::sqrt((1.0 - x) * (1.0 + x));
        }
        out.emplace_back(x, val);
    }
    return out;
}

} // namespace turanlab
