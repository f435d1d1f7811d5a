#include "igmc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "igmc/errors.hpp"

namespace igmc {

namespace {

void check_domain(Interval domain) {
    if (!std::isfinite(domain.lo) || !std::isfinite(domain.hi) || !(domain.lo < domain.hi))
        throw EmptyDomain("integration domain must be a finite interval with lo < hi");
}

// Breakpoints of f interior to (lo, hi), bracketed by lo and hi.
std::vector<double> piece_boundaries(const EmpiricalCdf& f, Interval domain) {
    std::vector<double> pts;
    pts.push_back(domain.lo);
    for (double b : f.breakpoints())
        if (b > domain.lo && b < domain.hi) pts.push_back(b);
    pts.push_back(domain.hi);
    return pts;
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Adaptive Simpson for a smooth integrand, absolute tolerance `tol`.
struct Quadrature {
    const ReferenceCdf& g;
    int max_depth;

    double simpson(double a, double b, double fa, double fm, double fb) const {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    }

    double refine(double a, double b, double fa, double fm, double fb, double whole,
                  double tol, int depth) const {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = g.eval(lm);
        const double frm = g.eval(rm);
        const double left = simpson(a, m, fa, flm, fm);
        const double right = simpson(m, b, fm, frm, fb);
        const double delta = left + right - whole;
        if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
        if (depth >= max_depth)
            throw QuadratureFailure("adaptive Simpson hit depth cap before tolerance");
        return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }

    double integrate(double a, double b, double tol) const {
        if (!(b > a)) return 0.0;
        const double fa = g.eval(a);
        const double fb = g.eval(b);
        const double fm = g.eval(0.5 * (a + b));
        return refine(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 0);
    }
};

// Crossing point of the monotone g with level c inside [a,b], by bisection.
double bisect_crossing(const ReferenceCdf& g, double c, double a, double b) {
    for (int i = 0; i < 200 && b - a > 0.0; ++i) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        if (g.eval(m) < c) {
            a = m;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

double l1_distance(const EmpiricalCdf& f, const EmpiricalCdf& g, Interval domain) {
    check_domain(domain);

    std::vector<double> pts;
    pts.reserve(f.breakpoints().size() + g.breakpoints().size() + 2);
    pts.push_back(domain.lo);
    for (double b : f.breakpoints())
        if (b > domain.lo && b < domain.hi) pts.push_back(b);
    for (double b : g.breakpoints())
        if (b > domain.lo && b < domain.hi) pts.push_back(b);
    pts.push_back(domain.hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    KahanSum total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double width = pts[i + 1] - pts[i];
        total.add(std::fabs(f.eval(pts[i]) - g.eval(pts[i])) * width);
    }
    return total.sum;
}

double l1_distance(const EmpiricalCdf& f, const ReferenceCdf& g, Interval domain, double tol) {
    check_domain(domain);
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    const std::vector<double> pts = piece_boundaries(f, domain);
    const double span = domain.hi - domain.lo;
    const Quadrature quad{g, 48};

    KahanSum total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i];
        const double b = pts[i + 1];
        const double c = f.eval(a);
        const double piece_tol = std::max(tol * (b - a) / span, 1e-16);
        const double ga = g.eval(a);
        const double gb = g.eval(b);

        if (ga >= c) {
            // g >= c on the whole piece
            total.add(quad.integrate(a, b, piece_tol) - c * (b - a));
        } else if (gb <= c) {
            // g <= c on the whole piece
            total.add(c * (b - a) - quad.integrate(a, b, piece_tol));
        } else {
            const double m = bisect_crossing(g, c, a, b);
            total.add(c * (m - a) - quad.integrate(a, m, 0.5 * piece_tol));
            total.add(quad.integrate(m, b, 0.5 * piece_tol) - c * (b - m));
        }
    }
    // |c - g| integrals are nonnegative; tiny negative residue is roundoff.
    return std::max(total.sum, 0.0);
}

double ks_distance(const EmpiricalCdf& f, const ReferenceCdf& g) {
    double sup = 0.0;
    const auto bps = f.breakpoints();
    const auto cum = f.cumulative();
    double prev = 0.0;
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const double gv = g.eval(bps[i]);
        sup = std::max(sup, std::fabs(cum[i] - gv));  // gap just after the jump
        sup = std::max(sup, std::fabs(prev - gv));    // gap approaching from the left
        prev = cum[i];
    }
    return sup;
}

double ks_distance(const EmpiricalCdf& f, const EmpiricalCdf& g) {
    // f - g is piecewise constant and right-continuous; the sup over all t
    // is attained at a breakpoint of either function.
    double sup = 0.0;
    for (double b : f.breakpoints()) sup = std::max(sup, std::fabs(f.eval(b) - g.eval(b)));
    for (double b : g.breakpoints()) sup = std::max(sup, std::fabs(f.eval(b) - g.eval(b)));
    return sup;
}

double dkw_band(std::size_t n, double alpha) {
    if (n < 1) throw std::invalid_argument("sample size must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidAlpha("alpha must lie in (0,1)");
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

} // namespace igmc
