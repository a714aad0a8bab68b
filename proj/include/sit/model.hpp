#ifndef SIT_MODEL_HPP
#define SIT_MODEL_HPP

#include <array>
#include <string>
#include <vector>

namespace sit {

/// Entomological and diffusion constants of the sterile-insect model.
/// Rates are per day, diffusivities km^2/day, muA2 per (day * individual).
struct ModelParams {
    double phi  = 10.0;    ///< eggs per deposit per day
    double gamma = 0.08;   ///< maturation rate, immature -> adult
    double muA1 = 0.05;    ///< density-independent immature mortality
    double muA2 = 2e-4;    ///< density-dependent immature mortality
    double r    = 0.49;    ///< sex ratio (fraction of females)
    double muF  = 0.1;     ///< female mortality
    double muM  = 1.0 / 7.0; ///< male mortality
    double muT  = 0.14;    ///< sterile-male mortality
    double dF   = 0.1;     ///< female diffusivity
    double dM   = 0.05;    ///< male diffusivity
    double dT   = 0.05;    ///< sterile-male diffusivity (4-field mode)

    /// muF < min(muM, gamma + muA1); required by the extinction-state
    /// eigenvector construction and the sigma2 > sigma3 ordering.
    bool techAssumptionHolds() const;
    /// dF >= dM, used by the sigma2 > sigma3 argument.
    bool diffusionOrderHolds() const { return dF >= dM; }
    bool allPositive() const;
};

/// Parameter validation outcome: warnings, not hard failures. Operations
/// whose math needs a condition enforce it themselves.
struct ParamReport {
    bool allPositive = false;
    bool sexRatioInRange = false;
    bool techAssumption = false;
    bool diffusionOrder = false;
    std::vector<std::string> warnings;
    bool ok() const { return allPositive && sexRatioInRange; }
};

ParamReport validateParams(const ModelParams& p);

/// Population triple (immatures, males, fertilized females) at a point.
struct State {
    double A = 0.0;
    double M = 0.0;
    double F = 0.0;

    double operator[](int i) const { return i == 0 ? A : (i == 1 ? M : F); }
    double& operator[](int i) { return i == 0 ? A : (i == 1 ? M : F); }
};

inline State operator*(double c, const State& s) { return {c * s.A, c * s.M, c * s.F}; }
inline State operator+(const State& a, const State& b) { return {a.A + b.A, a.M + b.M, a.F + b.F}; }
inline State operator-(const State& a, const State& b) { return {a.A - b.A, a.M - b.M, a.F - b.F}; }
bool allLess(const State& a, const State& b);
bool allLessEq(const State& a, const State& b);
double maxAbs(const State& s);

/// Dense 3x3 real matrix, row major.
struct Mat3 {
    std::array<std::array<double, 3>, 3> a{};
    double trace() const { return a[0][0] + a[1][1] + a[2][2]; }
};

State matVec(const Mat3& m, const State& v);

/// Mating ratio M/(M+MT), defined as 0 at M = MT = 0 (an extinct site
/// produces no offspring).
double matingRatio(double M, double MT);

/// Reaction kinetics H_MT(A,M,F): the per-day derivative triple.
State kinetics(const ModelParams& p, const State& s, double mt);

/// Jacobian of the kinetics at (s, mt). At mt = 0 the (3,1) entry is the
/// MT->0 limit r*gamma (valid for any M >= 0); the (3,2) entry is 0 when
/// M = MT = 0.
Mat3 kineticsJacobian(const ModelParams& p, const State& s, double mt);

/// Basic offspring number R = r*gamma*phi / (muF*(gamma+muA1)).
double basicOffspringNumber(const ModelParams& p);

/// Kinetics of the system normalized by the wild equilibrium:
///   ( (gamma+muA1)(R f - a - (R-1) a^2), muM (a - m), muF (a - f) ).
/// Fixed points are exactly 0 and 1. Requires R > 1.
State normalizedKinetics(const ModelParams& p, const State& u);

/// Jacobian of the normalized kinetics at 0 (the linearization every
/// spreading-speed computation uses).
Mat3 normalizedLinearizationAtZero(const ModelParams& p);

/// Irreducibility in the directed-graph sense: for every nonempty proper
/// index subset I there is a nonzero entry a_ij with i in I, j outside.
bool isIrreducible(const Mat3& m, double tol = 0.0);

}  // namespace sit

#endif
