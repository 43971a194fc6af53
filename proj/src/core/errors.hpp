#ifndef IRA_CORE_ERRORS_HPP
#define IRA_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ira {

enum class errc {
    invalid_parameter,
    insufficient_depth,
    precision_exhausted,
    domain_error,
    bracket_invalid,
    construction_failed,
    invalid_quantization,
    pilot_violation,
    decode_inconsistency,
    io_error,
    parse_error,
    validation_error,
    conjectural_refused,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_parameter: return "invalid-parameter";
        case errc::insufficient_depth: return "insufficient-depth";
        case errc::precision_exhausted: return "precision-exhausted";
        case errc::domain_error: return "domain-error";
        case errc::bracket_invalid: return "bracket-invalid";
        case errc::construction_failed: return "construction-failed";
        case errc::invalid_quantization: return "invalid-quantization";
        case errc::pilot_violation: return "pilot-violation";
        case errc::decode_inconsistency: return "decode-inconsistency";
        case errc::io_error: return "io-error";
        case errc::parse_error: return "parse-error";
        case errc::validation_error: return "validation-error";
        case errc::conjectural_refused: return "conjectural-refused";
    }
    return "unknown";
}

}  // namespace ira

#endif
