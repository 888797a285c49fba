#pragma once

#include <stdexcept>
#include <string>

namespace ratsos {

enum class errc {
    not_squarefree,
    reducible,
    irreducibility_uncertified,
    division_by_zero,
    field_mismatch,
    domain_mismatch,
    not_divisible,
    not_linear,
    zero_pivot_coefficient,
    no_real_embeddings,
    precision_exhausted,
    ramified_prime,
    tau_has_fixed_point,
    not_involution,
    not_transitive,
    general_position_unverified,
    not_totally_real,
    invalid_input_certificate,
    target_not_rational,
    rationality_failure,
    non_positive,
    not_psd_input,
    not_symmetric,
    identity_invalid,
    not_found_within_bound,
    not_totally_imaginary,
    isotropic_invalid,
    evidence_missing,
    budget_exhausted,
    odd_degree,
    degree_too_small,
    too_few_variables,
    usage_error,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_squarefree: return "NotSquarefree";
        case errc::reducible: return "Reducible";
        case errc::irreducibility_uncertified: return "IrreducibilityUncertified";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::domain_mismatch: return "DomainMismatch";
        case errc::not_divisible: return "NotDivisible";
        case errc::not_linear: return "NotLinear";
        case errc::zero_pivot_coefficient: return "ZeroPivotCoefficient";
        case errc::no_real_embeddings: return "NoRealEmbeddings";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::ramified_prime: return "RamifiedPrime";
        case errc::tau_has_fixed_point: return "TauHasFixedPoint";
        case errc::not_involution: return "NotInvolution";
        case errc::not_transitive: return "NotTransitive";
        case errc::general_position_unverified: return "GeneralPositionUnverified";
        case errc::not_totally_real: return "NotTotallyReal";
        case errc::invalid_input_certificate: return "InvalidInputCertificate";
        case errc::target_not_rational: return "TargetNotRational";
        case errc::rationality_failure: return "RationalityFailure";
        case errc::non_positive: return "NonPositive";
        case errc::not_psd_input: return "NotPSDInput";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::identity_invalid: return "IdentityInvalid";
        case errc::not_found_within_bound: return "NotFoundWithinBound";
        case errc::not_totally_imaginary: return "NotTotallyImaginary";
        case errc::isotropic_invalid: return "IsotropicInvalid";
        case errc::evidence_missing: return "EvidenceMissing";
        case errc::budget_exhausted: return "BudgetExhausted";
        case errc::odd_degree: return "OddDegree";
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::too_few_variables: return "TooFewVariables";
        case errc::usage_error: return "UsageError";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace ratsos
