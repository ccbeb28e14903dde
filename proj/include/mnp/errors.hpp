#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mnp {

/// Base class for all library errors. `code()` is a stable machine-readable
/// tag; `what()` is the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define MNP_DEFINE_ERROR(Name, code_str)                              \
    struct Name : Error {                                             \
        explicit Name(const std::string& w) : Error(code_str, w) {}   \
    }

MNP_DEFINE_ERROR(CompositeP, "composite_p");
MNP_DEFINE_ERROR(FieldMismatch, "field_mismatch");
MNP_DEFINE_ERROR(DivisionByZero, "division_by_zero");
MNP_DEFINE_ERROR(NotAUnit, "not_a_unit");
MNP_DEFINE_ERROR(NotASubfield, "not_a_subfield");
MNP_DEFINE_ERROR(ZeroPolynomial, "zero_polynomial");
MNP_DEFINE_ERROR(PrimeMismatch, "prime_mismatch");
MNP_DEFINE_ERROR(ZeroDivisor, "zero_divisor");
MNP_DEFINE_ERROR(InsufficientPrecision, "insufficient_precision");
MNP_DEFINE_ERROR(UnassignedClass, "unassigned_class");
MNP_DEFINE_ERROR(InconsistentCharacter, "inconsistent_character");
MNP_DEFINE_ERROR(NotAResidueRoot, "not_a_residue_root");
MNP_DEFINE_ERROR(DegenerateInput, "degenerate_input");
MNP_DEFINE_ERROR(BranchExplosion, "branch_explosion");
MNP_DEFINE_ERROR(PrecisionBeyondFormula, "precision_beyond_formula");
MNP_DEFINE_ERROR(ParseError, "parse");
MNP_DEFINE_ERROR(InternalError, "internal");

#undef MNP_DEFINE_ERROR

} // namespace mnp
