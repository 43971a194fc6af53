#include "core/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>

#include "core/bit_regular.hpp"
#include "core/check_regular.hpp"
#include "core/errors.hpp"

namespace ira {

namespace {

double q_closed(int q, double y) {
    // Q(y) = qy - (q-1) [1 - (1-y)^{q/(q-1)}]
    double dq = static_cast<double>(q);
    return dq * y - (dq - 1.0) * (1.0 - std::pow(1.0 - y, dq / (dq - 1.0)));
}

}  // namespace

DEPair DEPair::untruncated_bit_regular(int q, double p, int n_max) {
    DEPair pr;
    pr.form_ = Form::untruncated_bit_regular;
    pr.design_p_ = p;
    pr.q_ = q;
    pr.lambda_ = bit_regular_lambda(q);
    pr.rho_ = bit_regular_rho(q, p, n_max);
    pr.R_node_ = node_perspective(pr.rho_, NodeDegreeDistribution::Kind::check);
    return pr;
}

DEPair DEPair::untruncated_check_regular(double p, int n_max) {
    DEPair pr;
    pr.form_ = Form::untruncated_check_regular;
    pr.design_p_ = p;
    pr.lambda_ = check_regular_lambda_fast(p, n_max);
    pr.rho_.coeffs.assign(4, 0.0);
    pr.rho_.coeffs[3] = 1.0;
    pr.rho_.analytic_sum = 1.0;
    pr.rho_.analytic_integral = 1.0 / 3.0;
    pr.R_node_ = node_perspective(pr.rho_, NodeDegreeDistribution::Kind::check);
    return pr;
}

DEPair DEPair::from_truncated(const TruncatedPair& pair) {
    DEPair pr;
    pr.design_p_ = pair.design_p;
    pr.q_ = pair.q;
    pr.M_ = pair.M;
    pr.lambda_ = pair.lambda;
    pr.rho_ = pair.rho;
    pr.R_node_ = node_perspective(pair.rho, NodeDegreeDistribution::Kind::check);
    if (pair.kind == EnsembleKind::bit_regular) {
        pr.form_ = Form::truncated_bit_regular;
    } else {
        pr.form_ = Form::truncated_check_regular;
        for (std::size_t n = static_cast<std::size_t>(pair.M) + 1; n < pair.lambda_full.size(); ++n)
            pr.lambda_tail_.push_back(pair.lambda_full[n]);
    }
    return pr;
}

double DEPair::lambda_of(double y) const {
    switch (form_) {
        case Form::untruncated_bit_regular:
            return std::pow(y, q_ - 1);
        case Form::untruncated_check_regular:
            return lambda_closed_eval(design_p_, y);
        default:
            return lambda_.eval(y);
    }
}

double DEPair::rho_of(double y) const {
    switch (form_) {
        case Form::untruncated_bit_regular: {
            double denom = 1.0 - design_p_ + design_p_ * q_closed(q_, y);
            double num = 1.0 - std::pow(1.0 - y, 1.0 / (q_ - 1.0));
            return num / (denom * denom);
        }
        case Form::untruncated_check_regular:
        case Form::truncated_check_regular:
            return y * y;
        default:
            return rho_.eval(y);
    }
}

double DEPair::R_of(double y) const {
    switch (form_) {
        case Form::untruncated_bit_regular: {
            double qv = q_closed(q_, y);
            return qv / (1.0 - design_p_ + design_p_ * qv);
        }
        case Form::untruncated_check_regular:
        case Form::truncated_check_regular:
            return y * y * y;
        default:
            return R_node_.eval(y);
    }
}

double DEPair::map(double pr, double x) const {
    if (!(x >= 0.0 && x <= 1.0))
        throw error(errc::invalid_parameter, "de_map: x must lie in [0,1]");
    if (!(pr > 0.0 && pr < 1.0))
        throw error(errc::invalid_parameter, "de_map: p must lie in (0,1)");
    if (form_ == Form::untruncated_check_regular || form_ == Form::truncated_check_regular) {
        // rho = x^2, R = x^3: the inner bracket collapses to the factored
        // inverse-lambda form, exact at x -> 0
        double inner = lambda_inverse_eval(pr, x);
        inner = std::clamp(inner, 0.0, 1.0);
        return lambda_of(inner);
    }
    double y = 1.0 - x;
    double Rv = R_of(y);
    double den = 1.0 - pr * Rv;
    assert(den > 0.0);
    double ratio = (1.0 - pr) / den;
    double inner = 1.0 - ratio * ratio * rho_of(y);
    inner = std::clamp(inner, 0.0, 1.0);
    return lambda_of(inner);
}

DEMessages DEPair::map_detail(double pr, double x) const {
    DEMessages m;
    double y = 1.0 - x;
    double Rv = R_of(y);
    double den = 1.0 - pr * Rv;
    m.x1 = (1.0 - Rv) / den;
    m.x2 = pr * m.x1;
    double omx2 = (1.0 - pr) / den;  // 1 - x2
    m.x3 = 1.0 - omx2 * omx2 * rho_of(y);
    m.x3 = std::clamp(m.x3, 0.0, 1.0);
    m.f = lambda_of(m.x3);
    return m;
}

double DEPair::margin(double pr, double x) const {
    if (form_ == Form::truncated_check_regular && pr == design_p_ && !lambda_tail_.empty()) {
        // At the design erasure probability the parent pair satisfies the DE
        // equation with equality, so x - f(x) equals the dropped lambda tail
        // evaluated at y = lambda^{-1}(x). All terms are positive.
        double y = std::clamp(lambda_inverse_eval(pr, x), 0.0, 1.0);
        if (y <= 0.0) return x;  // f(0) = 0
        double h = 0.0;
        for (std::size_t i = lambda_tail_.size(); i-- > 0;) h = h * y + lambda_tail_[i];
        if (h <= 0.0) return 0.0;
        // tail = y^M * h, via logs when the power underflows
        double lt = static_cast<double>(M_) * std::log(y) + std::log(h);
        if (lt < -700.0) return std::numeric_limits<double>::denorm_min();
        return std::exp(lt);
    }
    return x - map(pr, x);
}

double de_map(const DEPair& pair, double p, double x) { return pair.map(p, x); }
DEMessages de_map_detail(const DEPair& pair, double p, double x) { return pair.map_detail(p, x); }

DETrajectory de_iterate(const DEPair& pair, double p, double x_init, int max_iters, double tol) {
    DETrajectory out;
    double x = x_init;
    out.values.push_back(x);
    for (int it = 0; it < max_iters; ++it) {
        double nx = pair.map(p, x);
        out.values.push_back(nx);
        ++out.iterations;
        if (std::fabs(nx - x) < tol) {
            out.converged = true;
            x = nx;
            break;
        }
        x = nx;
    }
    out.final_value = x;
    return out;
}

DEReport de_margin_check(const DEPair& pair, double p, int grid_size) {
    if (grid_size < 100)
        throw error(errc::invalid_parameter, "de_margin_check: grid_size must be >= 100");
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(grid_size) + 40);
    for (int k = 1; k <= grid_size; ++k)
        xs.push_back(static_cast<double>(k) / static_cast<double>(grid_size));
    for (int j = 1; j <= 20; ++j) {
        double t = std::pow(10.0, -9.0 * j / 20.0);
        xs.push_back(t);
        if (1.0 - t > 0.0 && 1.0 - t < 1.0) xs.push_back(1.0 - t);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    DEReport rep;
    rep.p = p;
    rep.grid = xs;
    rep.f_values.reserve(xs.size());
    rep.margins.reserve(xs.size());
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (double x : xs) {
        double m = pair.margin(p, x);
        rep.f_values.push_back(x - m);
        rep.margins.push_back(m);
        rep.min_margin = std::min(rep.min_margin, m);
    }
    rep.passes = rep.min_margin > 0.0;
    return rep;
}

std::string DEReport::to_csv() const {
    std::string out = "x,f_x,margin\n";
    char buf[128];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid[i], f_values[i], margins[i]);
        out += buf;
    }
    return out;
}

ThresholdResult threshold_search(const DEPair& pair, double p_lo, double p_hi, double tol,
                                 int grid_size) {
    auto passes = [&](double p) { return de_margin_check(pair, p, grid_size).passes; };
    if (!(p_lo < p_hi) || !passes(p_lo) || passes(p_hi))
        throw error(errc::bracket_invalid,
                    "threshold_search: DE must pass at p_lo and fail at p_hi");
    double lo = p_lo, hi = p_hi;
    for (int it = 0; it < 60 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (passes(mid))
            lo = mid;
        else
            hi = mid;
    }
    ThresholdResult r;
    r.p_star = 0.5 * (lo + hi);
    r.bracket_width = 0.5 * (hi - lo);
    return r;
}

namespace {

// Flags a divergent coefficient sum via growth across the last decade of
// stored depth: sum(L) >= 2 * sum(L/10).
struct DerivSum {
    double value = 0.0;
    bool divergent = false;
};

DerivSum edge_derivative_sum(const std::vector<double>& coeffs) {
    DerivSum out;
    std::size_t L = coeffs.size() > 0 ? coeffs.size() - 1 : 0;
    double at_decade = 0.0;
    std::size_t decade = L / 10;
    double s = 0.0;
    for (std::size_t d = 2; d <= L; ++d) {
        s += (static_cast<double>(d) - 1.0) * coeffs[d];
        if (d == decade) at_decade = s;
    }
    out.value = s;
    if (L >= 100 && at_decade > 0.0 && s >= 2.0 * at_decade) out.divergent = true;
    return out;
}

}  // namespace

StabilityReport stability_report(const DEPair& pair, double p) {
    StabilityReport rep;
    const auto& lam = pair.lambda_dd();
    const auto& rho = pair.rho_dd();
    rep.lambda2 = lam.coeff(2);
    rep.rho2 = rho.coeff(2);

    DerivSum rho_d = edge_derivative_sum(rho.coeffs);
    DerivSum lam_d = edge_derivative_sum(lam.coeffs);
    rep.rho_deriv_divergent = rho_d.divergent;
    rep.lambda_deriv_divergent = lam_d.divergent;

    double Rp1 = 0.0;  // R'(1) = sum i R_i
    const auto& Rn = pair.R_dd();
    for (std::size_t d = 1; d < Rn.coeffs.size(); ++d) Rp1 += static_cast<double>(d) * Rn.coeffs[d];

    if (rho_d.divergent) {
        rep.rhs_zero = 0.0;
        rep.zero_equality_limit = rep.lambda2 == 0.0;
        rep.zero_ok = rep.zero_equality_limit;
    } else {
        rep.rhs_zero = 1.0 / (2.0 * p * Rp1 / (1.0 - p) + rho_d.value);
        rep.zero_ok = rep.lambda2 < rep.rhs_zero;
        rep.zero_equality_limit =
            std::fabs(rep.lambda2 - rep.rhs_zero) <= 1e-9 * std::max(rep.lambda2, rep.rhs_zero);
    }

    if (lam_d.divergent) {
        rep.rhs_one = 0.0;
        rep.one_equality_limit = rep.rho2 == 0.0;
        rep.one_unstable = false;
    } else {
        rep.rhs_one = 1.0 / ((1.0 - p) * (1.0 - p) * lam_d.value);
        rep.one_unstable = rep.rho2 > rep.rhs_one;
        rep.one_equality_limit =
            std::fabs(rep.rho2 - rep.rhs_one) <= 1e-9 * std::max(rep.rho2, rep.rhs_one);
    }
    return rep;
}

std::string StabilityReport::to_text() const {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "stability x=0: ok=%d rhs=%.17g lambda2=%.17g rho_deriv_divergent=%d "
                  "equality_limit=%d\n"
                  "stability x=1: unstable=%d rhs=%.17g rho2=%.17g lambda_deriv_divergent=%d "
                  "equality_limit=%d\n",
                  zero_ok ? 1 : 0, rhs_zero, lambda2, rho_deriv_divergent ? 1 : 0,
                  zero_equality_limit ? 1 : 0, one_unstable ? 1 : 0, rhs_one, rho2,
                  lambda_deriv_divergent ? 1 : 0, one_equality_limit ? 1 : 0);
    return buf;
}

}  // namespace ira
