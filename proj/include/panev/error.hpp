#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace panev {

enum class errc {
    zero_polynomial,
    zero_function,
    zero_divisor,
    zero_diffpoly,
    division_by_zero_function,
    degenerate_map,
    identity_map_for_delta,
    arity_mismatch,
    radius_out_of_certificate,
    precondition_window,
    not_a_solution,
    target_is_solution,
    not_polynomial_in_f,
    degenerate_composition,
    generation_failure,
    ladder_mismatch,
    context_violation,
    hypothesis_violation,
    prime_mismatch,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::zero_function: return "ZeroFunction";
    case errc::zero_divisor: return "ZeroDivisor";
    case errc::zero_diffpoly: return "ZeroDiffPoly";
    case errc::division_by_zero_function: return "DivisionByZeroFunction";
    case errc::degenerate_map: return "DegenerateMap";
    case errc::identity_map_for_delta: return "IdentityMapForDelta";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::radius_out_of_certificate: return "RadiusOutOfCertificate";
    case errc::precondition_window: return "PreconditionWindow";
    case errc::not_a_solution: return "NotASolution";
    case errc::target_is_solution: return "TargetIsSolution";
    case errc::not_polynomial_in_f: return "NotPolynomialInF";
    case errc::degenerate_composition: return "DegenerateComposition";
    case errc::generation_failure: return "GenerationFailure";
    case errc::ladder_mismatch: return "LadderMismatch";
    case errc::context_violation: return "ContextViolation";
    case errc::hypothesis_violation: return "HypothesisViolation";
    case errc::prime_mismatch: return "PrimeMismatch";
    case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

/// Parse failure with the byte offset of the offending token and the set of
/// token spellings that would have been accepted there.
class syntax_error : public std::runtime_error {
public:
    syntax_error(std::size_t offset, std::vector<std::string> expected, const std::string& what)
        : std::runtime_error("SyntaxError at byte " + std::to_string(offset) + ": " + what),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

} // namespace panev
