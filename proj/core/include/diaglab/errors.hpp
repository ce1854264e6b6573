#ifndef DIAGLAB_ERRORS_HPP
#define DIAGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace diaglab {

// Base of all domain errors. `code()` is a stable machine-readable tag
// used by the CLI when serializing failures.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error("syntax_error", message), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ArityError : public Error {
public:
    ArityError(int index, int arity, const std::string& message)
        : Error("arity_error", message), index_(index), arity_(arity) {}
    int index() const noexcept { return index_; }
    int arity() const noexcept { return arity_; }

private:
    int index_;
    int arity_;
};

struct DenominatorVanishes : Error {
    explicit DenominatorVanishes(const std::string& m) : Error("denominator_vanishes", m) {}
};
struct CapNegative : Error {
    explicit CapNegative(const std::string& m) : Error("cap_negative", m) {}
};
struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& m) : Error("arity_mismatch", m) {}
};
struct ArityTooSmall : Error {
    explicit ArityTooSmall(const std::string& m) : Error("arity_too_small", m) {}
};
struct ResidueOutOfRange : Error {
    explicit ResidueOutOfRange(const std::string& m) : Error("residue_out_of_range", m) {}
};
struct EmptyList : Error {
    explicit EmptyList(const std::string& m) : Error("empty_list", m) {}
};
struct NotLaurentPolynomial : Error {
    explicit NotLaurentPolynomial(const std::string& m) : Error("not_laurent_polynomial", m) {}
};
struct SeedInconsistent : Error {
    explicit SeedInconsistent(const std::string& m) : Error("seed_inconsistent", m) {}
};
struct ContinuationSingular : Error {
    explicit ContinuationSingular(const std::string& m) : Error("continuation_singular", m) {}
};

class PochhammerZeroDenominator : public Error {
public:
    PochhammerZeroDenominator(int paramIndex, int termIndex, const std::string& m)
        : Error("pochhammer_zero_denominator", m), paramIndex_(paramIndex), termIndex_(termIndex) {}
    int paramIndex() const noexcept { return paramIndex_; }  // 1-based j
    int termIndex() const noexcept { return termIndex_; }    // first i with (beta_j)_i = 0

private:
    int paramIndex_;
    int termIndex_;
};

struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& m) : Error("window_too_small", m) {}
};
struct IrregularSingular : Error {
    explicit IrregularSingular(const std::string& m) : Error("irregular_singular", m) {}
};
struct IrrationalExponent : Error {
    explicit IrrationalExponent(const std::string& m) : Error("irrational_exponent", m) {}
};
struct GuessFailed : Error {
    explicit GuessFailed(const std::string& m) : Error("guess_failed", m) {}
};
struct WitnessFailed : Error {
    explicit WitnessFailed(const std::string& m) : Error("witness_failed", m) {}
};
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& m) : Error("invalid_argument", m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse_error", m) {}
};

}  // namespace diaglab

#endif
