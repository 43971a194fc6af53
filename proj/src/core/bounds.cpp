#include "core/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "core/errors.hpp"

namespace ira {

double p_eff(double P_pct, double p) {
    if (!(P_pct >= 0.0 && P_pct < 1.0) || !(p >= 0.0 && p < 1.0))
        throw error(errc::invalid_parameter, "p_eff: arguments out of range");
    return 1.0 - (1.0 - P_pct) * (1.0 - p);
}

BecBound bec_complexity_bound(const PuncturedScenario& s) {
    if (!(s.epsilon > 0.0 && s.epsilon < 1.0))
        throw error(errc::invalid_parameter, "bec_complexity_bound: epsilon out of range");
    BecBound b;
    double pe = p_eff(s.P_pct, s.p);
    double log_term = 0.0;
    if (s.epsilon < pe) {
        log_term = std::log(pe / s.epsilon) / std::log(1.0 / (1.0 - pe));
    } else {
        b.vacuous = true;
    }
    b.a_R_lower = log_term + static_cast<double>(s.l_min);
    b.chi_lower = s.p / (1.0 - s.p) * b.a_R_lower;
    return b;
}

MbiosBound mbios_complexity_bound(const PuncturedScenario& s) {
    if (!(s.epsilon > 0.0 && s.epsilon < 1.0))
        throw error(errc::invalid_parameter, "mbios_complexity_bound: epsilon out of range");
    if (!(s.C > 0.0 && s.C <= 1.0))
        throw error(errc::invalid_parameter, "mbios_complexity_bound: capacity out of range");
    MbiosBound b;
    double shrink = (1.0 - s.P_pct) * (1.0 - 2.0 * s.w);
    if (!(shrink > 0.0)) {
        b.vacuous = true;  // degenerate channel/puncturing, no contraction
        return b;
    }
    double arg = (1.0 / s.epsilon) * (1.0 - (1.0 - s.P_pct) * s.C) / (2.0 * s.C * M_LN2);
    if (arg <= 1.0) {
        b.vacuous = true;
        return b;
    }
    b.chi_lower = (1.0 - s.C) / (2.0 * s.C) * std::log(arg) / std::log(1.0 / shrink);
    return b;
}

BoundComparison compare_bounds_bec(double p, double P_pct, double epsilon, int l_min) {
    PuncturedScenario s = PuncturedScenario::bec(epsilon, p, P_pct, l_min);
    BoundComparison c;
    c.t3 = bec_complexity_bound(s).chi_lower;
    c.t4 = mbios_complexity_bound(s).chi_lower;
    c.ratio = c.t4 > 0.0 ? c.t3 / c.t4 : 0.0;
    return c;
}

std::string bounds_csv(const std::vector<PuncturedScenario>& scenarios) {
    std::string out = "epsilon,p,P_pct,l_min,P_eff,bound_t3,bound_t4,ratio\n";
    char buf[256];
    for (const auto& s : scenarios) {
        BoundComparison c = compare_bounds_bec(s.p, s.P_pct, s.epsilon, s.l_min);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g\n", s.epsilon,
                      s.p, s.P_pct, s.l_min, p_eff(s.P_pct, s.p), c.t3, c.t4, c.ratio);
        out += buf;
    }
    return out;
}

}  // namespace ira
