#ifndef IRA_CORE_ANALYSIS_HPP
#define IRA_CORE_ANALYSIS_HPP

#include <string>
#include <vector>

#include "core/degree_dist.hpp"

namespace ira {

// Erasure rates of the four message types at a fixed point with info-to-check
// erasure rate x (x0 = lambda(x3) is the updated value).
struct DEMessages {
    double x1 = 0.0;  // check -> code
    double x2 = 0.0;  // code -> check
    double x3 = 0.0;  // check -> info
    double f = 0.0;   // lambda(x3)
};

// A d.d. pair prepared for density evolution. Untruncated ensembles evaluate
// through their closed forms (their coefficient sequences are infinite);
// truncated pairs evaluate the stored polynomials.
class DEPair {
public:
    enum class Form {
        untruncated_bit_regular,
        truncated_bit_regular,
        untruncated_check_regular,
        truncated_check_regular,
    };

    static DEPair untruncated_bit_regular(int q, double p, int n_max = 10000);
    static DEPair untruncated_check_regular(double p, int n_max = 10000);
    static DEPair from_truncated(const TruncatedPair& pair);

    Form form() const { return form_; }
    bool truncated() const {
        return form_ == Form::truncated_bit_regular || form_ == Form::truncated_check_regular;
    }
    double design_p() const { return design_p_; }
    int q() const { return q_; }

    double lambda_of(double y) const;
    double rho_of(double y) const;
    double R_of(double y) const;

    // f(x) at channel erasure probability pr
    double map(double pr, double x) const;
    DEMessages map_detail(double pr, double x) const;
    // x - f(x); for the truncated check-regular pair evaluated at its design
    // erasure probability this is computed as the dropped coefficient tail,
    // which is positive and free of cancellation
    double margin(double pr, double x) const;

    const DegreeDistribution& lambda_dd() const { return lambda_; }
    const DegreeDistribution& rho_dd() const { return rho_; }
    const NodeDegreeDistribution& R_dd() const { return R_node_; }

private:
    Form form_ = Form::untruncated_check_regular;
    double design_p_ = 0.0;
    int q_ = 0;
    int M_ = 0;
    DegreeDistribution lambda_, rho_;
    NodeDegreeDistribution R_node_;
    std::vector<double> lambda_tail_;  // coefficients beyond M, check-regular truncated
};

struct DEReport {
    double p = 0.0;
    std::vector<double> grid;
    std::vector<double> f_values;
    std::vector<double> margins;
    double min_margin = 0.0;
    bool passes = false;

    std::string to_csv() const;  // x,f_x,margin
};

struct DETrajectory {
    std::vector<double> values;
    bool converged = false;
    double final_value = 0.0;
    int iterations = 0;
};

struct ThresholdResult {
    double p_star = 0.0;
    double bracket_width = 0.0;
};

struct StabilityReport {
    bool zero_ok = false;       // condition at x = 0 (decoding finishes)
    bool one_unstable = false;  // condition at x = 1 (decoding starts)
    double rhs_zero = 0.0;      // 0 when the denominator diverges
    double rhs_one = 0.0;
    bool rho_deriv_divergent = false;
    bool lambda_deriv_divergent = false;
    bool zero_equality_limit = false;  // condition met with equality in the limit
    bool one_equality_limit = false;
    double lambda2 = 0.0;
    double rho2 = 0.0;

    std::string to_text() const;
};

double de_map(const DEPair& pair, double p, double x);
DEMessages de_map_detail(const DEPair& pair, double p, double x);
DETrajectory de_iterate(const DEPair& pair, double p, double x_init, int max_iters, double tol);
DEReport de_margin_check(const DEPair& pair, double p, int grid_size = 10000);
ThresholdResult threshold_search(const DEPair& pair, double p_lo, double p_hi, double tol = 1e-6,
                                 int grid_size = 2000);
StabilityReport stability_report(const DEPair& pair, double p);

}  // namespace ira

#endif
