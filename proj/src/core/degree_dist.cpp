#include "core/degree_dist.hpp"

#include <cmath>
#include <cstdio>

#include "core/errors.hpp"

namespace ira {

double DegreeDistribution::stored_sum() const {
    double s = 0.0;
    for (std::size_t d = coeffs.size(); d-- > 1;) s += coeffs[d];
    return s;
}

double DegreeDistribution::stored_integral() const {
    double s = 0.0;
    for (std::size_t d = coeffs.size(); d-- > 1;) s += coeffs[d] / static_cast<double>(d);
    return s;
}

double DegreeDistribution::integral() const {
    if (analytic_integral) return *analytic_integral;
    return stored_integral();
}

double DegreeDistribution::eval(double x) const {
    // sum coeffs[d] x^{d-1} by Horner from the top degree
    double acc = 0.0;
    for (std::size_t d = coeffs.size(); d-- > 1;) acc = acc * x + coeffs[d];
    return acc;
}

double DegreeDistribution::eval_derivative(double x) const {
    double acc = 0.0;
    for (std::size_t d = coeffs.size(); d-- > 2;) acc = acc * x + coeffs[d] * static_cast<double>(d - 1);
    return acc;
}

double NodeDegreeDistribution::eval(double x) const {
    double acc = 0.0;
    for (std::size_t d = coeffs.size(); d-- > 1;) acc = acc * x + coeffs[d];
    return acc * x;
}

NodeDegreeDistribution node_perspective(const DegreeDistribution& dd,
                                        NodeDegreeDistribution::Kind kind) {
    if (dd.perspective != Perspective::edge)
        throw error(errc::invalid_parameter, "node_perspective: input must be edge-perspective");
    double total = 0.0;
    for (std::size_t d = 1; d < dd.coeffs.size(); ++d) total += dd.coeffs[d] / static_cast<double>(d);
    if (total <= 0.0)
        throw error(errc::invalid_parameter, "node_perspective: empty distribution");
    NodeDegreeDistribution out;
    out.kind = kind;
    out.coeffs.assign(dd.coeffs.size(), 0.0);
    for (std::size_t d = 1; d < dd.coeffs.size(); ++d)
        out.coeffs[d] = dd.coeffs[d] / static_cast<double>(d) / total;
    return out;
}

double design_rate(const DegreeDistribution& lambda, const DegreeDistribution& rho) {
    double li = lambda.integral();
    double ri = rho.integral();
    if (li <= 0.0 || ri <= 0.0)
        throw error(errc::invalid_parameter, "design_rate: empty distribution");
    return li / ri;
}

RegionStatus bit_regular_region(int q, double p) {
    if (q == 3 && p <= 1.0 / 13.0 + 1e-15) return RegionStatus::proven;
    if (q >= 4 && p <= bit_regular_conjecture_bound(q) + 1e-15) return RegionStatus::conjectural;
    return RegionStatus::unsupported;
}

double bit_regular_conjecture_bound(int q) {
    double dq = static_cast<double>(q);
    if (q <= 8) return (6.0 - 7.0 * dq + 2.0 * dq * dq) / (6.0 - 13.0 * dq + 8.0 * dq * dq);
    return (12.0 - 17.0 * dq + 6.0 * dq * dq) / (12.0 - 37.0 * dq + 26.0 * dq * dq);
}

RegionStatus check_regular_region(double p) {
    if (p <= 0.95 + 1e-15) return RegionStatus::proven;
    return RegionStatus::conjectural;
}

std::string dd_to_csv(const DegreeDistribution& dd) {
    std::string out = "n,coefficient\n";
    char buf[64];
    for (std::size_t d = 1; d < dd.coeffs.size(); ++d) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", d, dd.coeffs[d]);
        out += buf;
    }
    return out;
}

}  // namespace ira
