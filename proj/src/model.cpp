#include "sit/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sit {

bool ModelParams::techAssumptionHolds() const {
    return muF < std::min(muM, gamma + muA1);
}

bool ModelParams::allPositive() const {
    return phi > 0 && gamma > 0 && muA1 > 0 && muA2 > 0 && r > 0 && muF > 0 &&
           muM > 0 && muT > 0 && dF > 0 && dM > 0 && dT > 0;
}

ParamReport validateParams(const ModelParams& p) {
    ParamReport rep;
    rep.allPositive = p.allPositive();
    rep.sexRatioInRange = p.r > 0.0 && p.r < 1.0;
    rep.techAssumption = p.techAssumptionHolds();
    rep.diffusionOrder = p.diffusionOrderHolds();
    if (!rep.allPositive) rep.warnings.push_back("all parameters must be strictly positive");
    if (!rep.sexRatioInRange) rep.warnings.push_back("sex ratio r must lie in (0,1)");
    if (!rep.techAssumption)
        rep.warnings.push_back("muF < min(muM, gamma+muA1) fails; extinction-state eigenvector undefined");
    if (!rep.diffusionOrder)
        rep.warnings.push_back("dF < dM; sigma2 > sigma3 ordering not guaranteed");
    return rep;
}

bool allLess(const State& a, const State& b) {
    return a.A < b.A && a.M < b.M && a.F < b.F;
}

bool allLessEq(const State& a, const State& b) {
    return a.A <= b.A && a.M <= b.M && a.F <= b.F;
}

double maxAbs(const State& s) {
    return std::max({std::fabs(s.A), std::fabs(s.M), std::fabs(s.F)});
}

State matVec(const Mat3& m, const State& v) {
    State out;
    for (int i = 0; i < 3; ++i)
        out[i] = m.a[i][0] * v.A + m.a[i][1] * v.M + m.a[i][2] * v.F;
    return out;
}

double matingRatio(double M, double MT) {
    const double denom = M + MT;
    return denom > 0.0 ? M / denom : 0.0;
}

State kinetics(const ModelParams& p, const State& s, double mt) {
    State rate;
    rate.A = p.phi * s.F - (p.gamma + p.muA1 + p.muA2 * s.A) * s.A;
    rate.M = (1.0 - p.r) * p.gamma * s.A - p.muM * s.M;
    rate.F = matingRatio(s.M, mt) * p.r * p.gamma * s.A - p.muF * s.F;
    return rate;
}

Mat3 kineticsJacobian(const ModelParams& p, const State& s, double mt) {
    Mat3 j;
    j.a[0][0] = -(p.gamma + p.muA1) - 2.0 * p.muA2 * s.A;
    j.a[0][1] = 0.0;
    j.a[0][2] = p.phi;
    j.a[1][0] = (1.0 - p.r) * p.gamma;
    j.a[1][1] = -p.muM;
    j.a[1][2] = 0.0;
    // mt = 0: lim_{MT->0} M/(M+MT) = 1 for any M >= 0, matching the
    // linearization used for the no-control spreading analysis.
    j.a[2][0] = p.r * p.gamma * (mt == 0.0 ? 1.0 : matingRatio(s.M, mt));
    const double denom = s.M + mt;
    j.a[2][1] = denom > 0.0 ? p.r * p.gamma * s.A * mt / (denom * denom) : 0.0;
    j.a[2][2] = -p.muF;
    return j;
}

double basicOffspringNumber(const ModelParams& p) {
    return p.r * p.gamma * p.phi / (p.muF * (p.gamma + p.muA1));
}

State normalizedKinetics(const ModelParams& p, const State& u) {
    const double R = basicOffspringNumber(p);
    if (R <= 1.0)
        throw std::invalid_argument("normalizedKinetics requires a basic offspring number > 1");
    const double a1 = p.gamma + p.muA1;
    return {a1 * (R * u.F - u.A - (R - 1.0) * u.A * u.A),
            p.muM * (u.A - u.M),
            p.muF * (u.A - u.F)};
}

Mat3 normalizedLinearizationAtZero(const ModelParams& p) {
    const double R = basicOffspringNumber(p);
    if (R <= 1.0)
        throw std::invalid_argument("normalized linearization requires a basic offspring number > 1");
    const double a1 = p.gamma + p.muA1;
    Mat3 m;
    m.a = {{{-a1, 0.0, R * a1}, {p.muM, -p.muM, 0.0}, {p.muF, 0.0, -p.muF}}};
    return m;
}

bool isIrreducible(const Mat3& m, double tol) {
    // Proper nonempty subsets of {0,1,2} as bitmasks.
    for (int mask = 1; mask < 7; ++mask) {
        bool found = false;
        for (int i = 0; i < 3 && !found; ++i) {
            if (!(mask & (1 << i))) continue;
            for (int jc = 0; jc < 3 && !found; ++jc) {
                if (mask & (1 << jc)) continue;
                if (std::fabs(m.a[i][jc]) > tol) found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace sit
