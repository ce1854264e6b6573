#ifndef DIAGLAB_EXPR_HPP
#define DIAGLAB_EXPR_HPP

#include <memory>
#include <string>

#include "diaglab/rational.hpp"

namespace diaglab {

// Immutable AST over rational constants, variables x0..x{arity-1}, the four
// arithmetic operations and integer powers (negative exponents allowed).
// Note: "p/q" in input text parses as an explicit division node; constant
// arithmetic is exact either way.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Const, Var, Add, Sub, Mul, Div, Pow };
    Kind kind;
    Rational value;    // Const
    int varIndex = 0;  // Var
    ExprPtr left, right;
    long exponent = 0;  // Pow (right unused)
};

class RationalExpr {
public:
    RationalExpr() = default;
    RationalExpr(int arity, ExprPtr root);

    int arity() const { return arity_; }
    const ExprPtr& root() const { return root_; }

    std::string str() const;
    bool structurallyEqual(const RationalExpr& other) const;

    // Same tree with every variable index shifted by `offset`, declared at
    // the given arity. Used to place factors on disjoint variables.
    RationalExpr reindexed(int offset, int newArity) const;

    static RationalExpr constant(int arity, const Rational& c);
    static RationalExpr variable(int arity, int index);
    static RationalExpr add(const RationalExpr& a, const RationalExpr& b);
    static RationalExpr sub(const RationalExpr& a, const RationalExpr& b);
    static RationalExpr mul(const RationalExpr& a, const RationalExpr& b);
    static RationalExpr div(const RationalExpr& a, const RationalExpr& b);
    static RationalExpr pow(const RationalExpr& a, long e);

private:
    int arity_ = 0;
    ExprPtr root_;
};

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' int)?
//   base   := rational | var | '(' expr ')'
// Whitespace is insignificant. Variables are x0..x{arity-1}.
// Throws SyntaxError (with position) or ArityError.
RationalExpr parseExpr(const std::string& text, int arity);

}  // namespace diaglab

#endif
