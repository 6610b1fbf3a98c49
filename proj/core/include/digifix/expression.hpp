#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "digifix/exact.hpp"

namespace digifix {

/// Why an expression has no real value at a point.
struct EvalFailure {
    enum class Kind { NotReal, DivisionByZero, Unsupported };
    Kind kind;
    std::string detail;
};

using EvalResult = std::variant<Real, EvalFailure>;

/// Arithmetic expression over one variable `x`, evaluated exactly.
///
/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('-' | '+') unary | power
///   power  := atom ('^' integer)?
///   atom   := number | 'x' | '(' expr ')' | 'sqrt' '(' expr ')'
///           | 'root' '(' expr ',' integer ')'
///   number := digits ('.' digits)?
///
/// `sqrt` of a perfect rational square is rational; otherwise the result
/// is an exact radical (never rounded).
class Expression {
public:
    struct Node;

    /// Throws InputError with the offending column on malformed text.
    static Expression parse(std::string_view text);

    /// Evaluates with x bound to `x` (or unbound when absent; referring to
    /// x then yields EvalFailure::Unsupported).
    EvalResult evaluate(const std::optional<Real>& x = std::nullopt) const;

    bool uses_variable() const;
    const std::string& text() const { return text_; }

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

/// Parses and evaluates a closed expression ("sqrt(2)/2", "7/2", ...).
/// Throws InputError when the text is malformed or has no real value.
Real parse_real(std::string_view text);

}  // namespace digifix
