#ifndef SIT_CUBIC_HPP
#define SIT_CUBIC_HPP

#include <array>

namespace sit {

/// Real roots of x^3 + a x^2 + b x + c = 0, Newton-polished.
struct CubicRoots {
    int count = 0;                  ///< 1 or 3 (multiplicities repeated)
    std::array<double, 3> root{};   ///< first `count` entries valid, ascending
};

CubicRoots solveCubicReal(double a, double b, double c);

/// The unique positive root of a cubic with exactly one sign change on
/// (0, inf): bisection on [0, hi] with hi expanded until f(hi) > 0, then
/// Newton polish. Throws std::runtime_error if no sign change is found.
double positiveCubicRoot(double a, double b, double c, double hi);

}  // namespace sit

#endif
