#ifndef IRA_CORE_BOUNDS_HPP
#define IRA_CORE_BOUNDS_HPP

#include <string>
#include <vector>

namespace ira {

// Parameters of a randomly punctured transmission.
struct PuncturedScenario {
    double epsilon = 0.0;  // capacity gap
    double p = 0.0;        // BEC erasure probability
    double C = 0.0;        // channel capacity, bits/use (BEC: 1-p)
    double P_pct = 0.0;    // information-bit puncturing rate
    int l_min = 2;         // min parity-side edges per check
    double w = 0.0;        // channel overlap (BEC: p/2)

    static PuncturedScenario bec(double epsilon, double p, double P_pct, int l_min = 2) {
        PuncturedScenario s;
        s.epsilon = epsilon;
        s.p = p;
        s.C = 1.0 - p;
        s.P_pct = P_pct;
        s.l_min = l_min;
        s.w = p / 2.0;
        return s;
    }
};

// Effective erasure probability 1 - (1 - P_pct)(1 - p).
double p_eff(double P_pct, double p);

struct BecBound {
    double chi_lower = 0.0;  // decoding complexity per information bit
    double a_R_lower = 0.0;  // average parity-check degree
    bool vacuous = false;    // log term clamped (epsilon >= P_eff)
};

// BEC complexity lower bound: chi >= p/(1-p) (ln(P_eff/eps)/ln(1/(1-P_eff)) + l_min).
BecBound bec_complexity_bound(const PuncturedScenario& s);

struct MbiosBound {
    double chi_lower = 0.0;  // complexity per iteration
    bool vacuous = false;
};

// General-channel bound: chi >= (1-C)/(2C) ln((1/eps)(1-(1-P_pct)C)/(2C ln2))
//                               / ln(1/((1-P_pct)(1-2w))).
MbiosBound mbios_complexity_bound(const PuncturedScenario& s);

struct BoundComparison {
    double t3 = 0.0;
    double t4 = 0.0;
    double ratio = 0.0;  // t3 / t4
};

BoundComparison compare_bounds_bec(double p, double P_pct, double epsilon, int l_min = 2);

// CSV: epsilon,p,P_pct,l_min,P_eff,bound_t3,bound_t4,ratio
std::string bounds_csv(const std::vector<PuncturedScenario>& scenarios);

}  // namespace ira

#endif
