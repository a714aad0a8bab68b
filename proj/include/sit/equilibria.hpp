#ifndef SIT_EQUILIBRIA_HPP
#define SIT_EQUILIBRIA_HPP

#include <string>
#include <vector>

#include "sit/model.hpp"

namespace sit {

/// Largest real part among the eigenvalues of a 3x3 matrix, computed from
/// the characteristic cubic (closed-form branches + Newton polish).
double stabilityModulus(const Mat3& m);

/// Release threshold: Q = muA2*muM/((gamma+muA1)(1-r)gamma),
/// MT1 = (sqrt(R)-1)^2 / Q. Requires R > 1.
struct SitThreshold {
    double Q = 0.0;
    double MT1 = 0.0;
};
SitThreshold sitThreshold(const ModelParams& p);

/// Wild equilibrium E* = (A*, M*, F*). Requires R > 1.
State wildEquilibrium(const ModelParams& p);

/// Discriminant block for the two positive equilibria under release mt:
/// delta = ((sqrt(R)-1)^2 - Q mt)((sqrt(R)+1)^2 - Q mt),
/// alpha± = (R - 1 - Q mt ± sqrt(delta)) / 2. The roots satisfy
/// alpha+ * alpha- = Q mt.
struct Discriminant {
    double delta = 0.0;
    double alphaPlus = 0.0;
    double alphaMinus = 0.0;
};
Discriminant discriminantAt(const ModelParams& p, double mt);

enum class Regime { RLeOne, NoControl, BelowThreshold, AtThreshold, AboveThreshold };
const char* regimeName(Regime r);

enum class EquilibriumLabel { Zero, E1, Edagger, E2, Estar };
const char* equilibriumLabelName(EquilibriumLabel l);

struct LabeledEquilibrium {
    EquilibriumLabel label = EquilibriumLabel::Zero;
    State state;
    double stability = 0.0;  ///< stability modulus of the kinetics Jacobian
};

struct EquilibriumReport {
    double R = 0.0;
    double Q = 0.0;    ///< 0 when R <= 1 (threshold undefined)
    double MT1 = 0.0;  ///< 0 when R <= 1
    double mt = 0.0;
    Regime regime = Regime::RLeOne;
    std::vector<LabeledEquilibrium> equilibria;  ///< ordered 0, E1, (Edagger,) E2/E*
};

/// All homogeneous equilibria and their stability moduli for a given
/// constant sterile level. Total: every mt >= 0 classifies.
EquilibriumReport sitEquilibria(const ModelParams& p, double mt);

/// Numeric verification of the bistable-wavefront hypotheses for
/// 0 < mt < MT1: sign pattern of the stability moduli at 0, E1, E2, a
/// strictly positive extinction-state eigenvector, and irreducibility of
/// the Jacobians at E1, E2.
struct BistableHypotheses {
    bool pass = false;
    double sAtZero = 0.0;
    double sAtE1 = 0.0;
    double sAtE2 = 0.0;
    State e0;  ///< unit eigenvector of the Jacobian at 0 for lambda0 = -muF
    bool e0Positive = false;
    bool irreducibleAtE1 = false;
    bool irreducibleAtE2 = false;
    std::vector<std::string> failures;
};
BistableHypotheses checkBistableHypotheses(const ModelParams& p, double mt);

}  // namespace sit

#endif
