#ifndef IRA_CORE_DEGREE_DIST_HPP
#define IRA_CORE_DEGREE_DIST_HPP

#include <optional>
#include <string>
#include <vector>

namespace ira {

enum class Perspective { edge, node };

// Positivity status of the parameter region the distribution was computed in.
enum class RegionStatus { proven, conjectural, unsupported };

// Degree distribution: coeffs[d] is the fraction of edges attached to
// degree-d nodes (edge perspective), i.e. the coefficient of x^{d-1}.
// Slot 0 is unused; slot 1 holds the degree-1 mass of a truncated check
// distribution and is zero otherwise.
struct DegreeDistribution {
    std::vector<double> coeffs;
    Perspective perspective = Perspective::edge;
    // Known closed-form totals, used to certify tails by subtraction:
    //   analytic_sum      = sum_d coeffs[d] over the full (infinite) support
    //   analytic_integral = sum_d coeffs[d]/d over the full support
    std::optional<double> analytic_sum;
    std::optional<double> analytic_integral;
    RegionStatus region = RegionStatus::proven;

    int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double coeff(int d) const {
        return (d >= 0 && d < static_cast<int>(coeffs.size())) ? coeffs[d] : 0.0;
    }
    // Sum of stored coefficients (<= 1 + rounding for a proper d.d.).
    double stored_sum() const;
    // Sum of coeffs[d]/d over stored range.
    double stored_integral() const;
    // Integral including the certified analytic tail when available.
    double integral() const;
    // Evaluate sum_d coeffs[d] * x^{d-1} over the stored range.
    double eval(double x) const;
    // Evaluate the derivative sum_d (d-1) coeffs[d] x^{d-2}.
    double eval_derivative(double x) const;
};

// Node-perspective distribution: coeffs[d] is the fraction of nodes of degree d.
struct NodeDegreeDistribution {
    enum class Kind { info, check };
    std::vector<double> coeffs;
    Kind kind = Kind::check;

    int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double coeff(int d) const {
        return (d >= 0 && d < static_cast<int>(coeffs.size())) ? coeffs[d] : 0.0;
    }
    // Evaluate sum_d coeffs[d] * x^d.
    double eval(double x) const;
};

// Node fractions from an edge-perspective d.d.: mass at degree d proportional
// to coeffs[d]/d, normalized over the stored range.
NodeDegreeDistribution node_perspective(const DegreeDistribution& dd,
                                        NodeDegreeDistribution::Kind kind);

// Design rate = integral of lambda / integral of rho, both including
// certified analytic tails when present.
double design_rate(const DegreeDistribution& lambda, const DegreeDistribution& rho);

enum class EnsembleKind { bit_regular, check_regular };

struct BitRegularSpec {
    int q = 3;
    double p = 0.0;
    double epsilon = 0.0;
};

struct CheckRegularSpec {
    double p = 0.0;
    double epsilon = 0.0;
};

// Positivity region classification: proved, conjectured, or neither.
RegionStatus bit_regular_region(int q, double p);
RegionStatus check_regular_region(double p);
// Conjectured admissible erasure probability for bit-regular ensembles, q >= 4.
double bit_regular_conjecture_bound(int q);

// A truncated (finite) d.d. pair ready for code construction.
struct TruncatedPair {
    EnsembleKind kind = EnsembleKind::check_regular;
    DegreeDistribution lambda;   // sub-stochastic for check-regular pairs
    DegreeDistribution rho;      // carries degree-1 mass for bit-regular pairs
    int M = 0;                   // truncation degree
    double pilot_fraction = 0.0; // delta, check-regular only
    double design_rate = 0.0;
    double design_p = 0.0;
    double epsilon = 0.0;
    int q = 0;                   // repetition degree, bit-regular only
    // Full-depth lambda coefficients (check-regular), kept so the DE margin at
    // the design erasure probability can be evaluated as the dropped tail.
    std::vector<double> lambda_full;
};

// CSV dump "n,coefficient" at full double precision.
std::string dd_to_csv(const DegreeDistribution& dd);

// Compute the ensemble's d.d. to depth n_max and epsilon-truncate it.
TruncatedPair make_truncated_pair(const BitRegularSpec& spec, int n_max);
TruncatedPair make_truncated_pair(const CheckRegularSpec& spec, int n_max);

}  // namespace ira

#endif
