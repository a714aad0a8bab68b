#include "sit/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sit {
namespace {

double evalCubic(double a, double b, double c, double x) {
    return ((x + a) * x + b) * x + c;
}

double polish(double a, double b, double c, double x) {
    for (int it = 0; it < 50; ++it) {
        const double f = evalCubic(a, b, c, x);
        const double df = (3.0 * x + 2.0 * a) * x + b;
        if (df == 0.0) break;
        const double step = f / df;
        x -= step;
        if (std::fabs(step) <= 1e-16 * (1.0 + std::fabs(x))) break;
    }
    return x;
}

}  // namespace

CubicRoots solveCubicReal(double a, double b, double c) {
    CubicRoots out;
    // Depressed form via x = t - a/3: t^3 + pt + q.
    const double a2 = a * a;
    const double q = (a2 - 3.0 * b) / 9.0;
    const double r = (a * (2.0 * a2 - 9.0 * b) + 27.0 * c) / 54.0;
    const double r2 = r * r;
    const double q3 = q * q * q;
    if (r2 < q3) {
        // Three real roots (trigonometric branch).
        double t = r / std::sqrt(q3);
        t = std::clamp(t, -1.0, 1.0);
        t = std::acos(t);
        const double shift = a / 3.0;
        const double s = -2.0 * std::sqrt(q);
        out.count = 3;
        out.root[0] = s * std::cos(t / 3.0) - shift;
        out.root[1] = s * std::cos((t + 2.0 * M_PI) / 3.0) - shift;
        out.root[2] = s * std::cos((t - 2.0 * M_PI) / 3.0) - shift;
    } else {
        const double u3 = -r - std::copysign(std::sqrt(r2 - q3), r);
        const double u = std::cbrt(u3);
        const double v = (u == 0.0) ? 0.0 : q / u;
        out.count = 1;
        out.root[0] = (u + v) - a / 3.0;
    }
    for (int i = 0; i < out.count; ++i) out.root[i] = polish(a, b, c, out.root[i]);
    std::sort(out.root.begin(), out.root.begin() + out.count);
    return out;
}

double positiveCubicRoot(double a, double b, double c, double hi) {
    double lo = 0.0;
    if (evalCubic(a, b, c, lo) >= 0.0)
        throw std::runtime_error("positiveCubicRoot: no sign change at the origin");
    int expand = 0;
    while (evalCubic(a, b, c, hi) <= 0.0) {
        hi *= 2.0;
        if (++expand > 200) throw std::runtime_error("positiveCubicRoot: no bracket found");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (evalCubic(a, b, c, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * (1.0 + hi)) break;
    }
    return polish(a, b, c, 0.5 * (lo + hi));
}

}  // namespace sit
