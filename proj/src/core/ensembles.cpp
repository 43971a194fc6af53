#include "core/bit_regular.hpp"
#include "core/check_regular.hpp"
#include "core/degree_dist.hpp"
#include "core/errors.hpp"

namespace ira {

TruncatedPair make_truncated_pair(const BitRegularSpec& spec, int n_max) {
    if (spec.q < 3) throw error(errc::invalid_parameter, "ensemble: q must be >= 3");
    auto rho = bit_regular_rho(spec.q, spec.p, n_max);
    return truncate_rho(rho, spec.q, spec.p, spec.epsilon);
}

TruncatedPair make_truncated_pair(const CheckRegularSpec& spec, int n_max) {
    auto lam = check_regular_lambda_fast(spec.p, n_max);
    return truncate_lambda(lam, spec.p, spec.epsilon);
}

}  // namespace ira
