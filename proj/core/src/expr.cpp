#include "diaglab/expr.hpp"

#include <cctype>
#include <sstream>

#include "diaglab/errors.hpp"

namespace diaglab {

namespace {

ExprPtr makeConst(const Rational& c) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Const;
    n->value = c;
    return n;
}

ExprPtr makeVar(int index) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Var;
    n->varIndex = index;
    return n;
}

ExprPtr makeBinary(ExprNode::Kind kind, ExprPtr l, ExprPtr r) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

ExprPtr makePow(ExprPtr base, long e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Pow;
    n->left = std::move(base);
    n->exponent = e;
    return n;
}

int precedence(ExprNode::Kind k) {
    switch (k) {
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub: return 1;
        case ExprNode::Kind::Mul:
        case ExprNode::Kind::Div: return 2;
        case ExprNode::Kind::Pow: return 3;
        default: return 4;
    }
}

void printNode(std::ostringstream& os, const ExprPtr& n) {
    auto printChild = [&](const ExprPtr& child, bool needParens) {
        if (needParens) {
            os << "(";
            printNode(os, child);
            os << ")";
        } else {
            printNode(os, child);
        }
    };
    int p = precedence(n->kind);
    switch (n->kind) {
        case ExprNode::Kind::Const: os << n->value.str(); break;
        case ExprNode::Kind::Var: os << "x" << n->varIndex; break;
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub:
        case ExprNode::Kind::Mul:
        case ExprNode::Kind::Div: {
            printChild(n->left, precedence(n->left->kind) < p);
            switch (n->kind) {
                case ExprNode::Kind::Add: os << "+"; break;
                case ExprNode::Kind::Sub: os << "-"; break;
                case ExprNode::Kind::Mul: os << "*"; break;
                default: os << "/"; break;
            }
            // Same-precedence right children keep their parentheses so the
            // printed text reparses to the identical tree.
            printChild(n->right, precedence(n->right->kind) <= p);
            break;
        }
        case ExprNode::Kind::Pow:
            printChild(n->left, precedence(n->left->kind) < 4);
            os << "^" << n->exponent;
            break;
    }
}

bool nodesEqual(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::Kind::Const: return a->value == b->value;
        case ExprNode::Kind::Var: return a->varIndex == b->varIndex;
        case ExprNode::Kind::Pow:
            return a->exponent == b->exponent && nodesEqual(a->left, b->left);
        default: return nodesEqual(a->left, b->left) && nodesEqual(a->right, b->right);
    }
}

ExprPtr reindexNode(const ExprPtr& n, int offset) {
    switch (n->kind) {
        case ExprNode::Kind::Const: return n;
        case ExprNode::Kind::Var: return makeVar(n->varIndex + offset);
        case ExprNode::Kind::Pow: return makePow(reindexNode(n->left, offset), n->exponent);
        default:
            return makeBinary(n->kind, reindexNode(n->left, offset), reindexNode(n->right, offset));
    }
}

void checkIndices(const ExprPtr& n, int arity) {
    switch (n->kind) {
        case ExprNode::Kind::Const: return;
        case ExprNode::Kind::Var:
            if (n->varIndex < 0 || n->varIndex >= arity)
                throw ArityError(n->varIndex, arity,
                                 "variable x" + std::to_string(n->varIndex) +
                                     " out of range for arity " + std::to_string(arity));
            return;
        case ExprNode::Kind::Pow: checkIndices(n->left, arity); return;
        default:
            checkIndices(n->left, arity);
            checkIndices(n->right, arity);
    }
}

class Parser {
public:
    Parser(const std::string& text, int arity) : text_(text), arity_(arity) {}

    RationalExpr run() {
        ExprPtr e = parseSum();
        skipSpace();
        if (pos_ != text_.size()) fail("end of input or an operator");
        return RationalExpr(arity_, e);
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(pos_, "syntax error at position " + std::to_string(pos_) +
                                    ": expected " + expected);
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peekChar(char c) {
        skipSpace();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consumeChar(char c) {
        if (peekChar(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer parseDigits(const std::string& what) {
        skipSpace();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(what);
        return Integer(text_.substr(start, pos_ - start));
    }

    long parseSignedInt() {
        skipSpace();
        bool neg = consumeChar('-');
        if (!neg) consumeChar('+');
        Integer d = parseDigits("an integer");
        if (!d.fits_slong_p()) fail("a smaller integer");
        long v = d.get_si();
        return neg ? -v : v;
    }

    ExprPtr parseSum() {
        ExprPtr left = parseTerm();
        while (true) {
            if (consumeChar('+')) left = makeBinary(ExprNode::Kind::Add, left, parseTerm());
            else if (consumeChar('-')) left = makeBinary(ExprNode::Kind::Sub, left, parseTerm());
            else return left;
        }
    }

    ExprPtr parseTerm() {
        ExprPtr left = parseFactor();
        while (true) {
            if (consumeChar('*')) left = makeBinary(ExprNode::Kind::Mul, left, parseFactor());
            else if (consumeChar('/')) left = makeBinary(ExprNode::Kind::Div, left, parseFactor());
            else return left;
        }
    }

    ExprPtr parseFactor() {
        ExprPtr base = parseBase();
        if (consumeChar('^')) return makePow(base, parseSignedInt());
        return base;
    }

    ExprPtr parseBase() {
        skipSpace();
        if (pos_ >= text_.size()) fail("a number, a variable, or '('");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = parseSum();
            if (!consumeChar(')')) fail("')'");
            return e;
        }
        if (c == 'x') {
            std::size_t varPos = pos_;
            ++pos_;
            Integer d = parseDigits("a variable index after 'x'");
            if (!d.fits_sint_p()) fail("a smaller variable index");
            int idx = static_cast<int>(d.get_si());
            if (idx >= arity_)
                throw ArityError(idx, arity_,
                                 "variable x" + std::to_string(idx) + " at position " +
                                     std::to_string(varPos) + " exceeds arity " +
                                     std::to_string(arity_));
            return makeVar(idx);
        }
        if (c == '-') {
            ++pos_;
            return makeConst(Rational(-Integer(parseDigits("digits after '-'"))));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return makeConst(Rational(parseDigits("digits")));
        fail("a number, a variable, or '('");
    }

    const std::string& text_;
    int arity_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalExpr::RationalExpr(int arity, ExprPtr root) : arity_(arity), root_(std::move(root)) {
    if (arity_ < 0) throw InvalidArgument("negative arity");
    if (root_) checkIndices(root_, arity_);
}

std::string RationalExpr::str() const {
    if (!root_) return "0";
    std::ostringstream os;
    printNode(os, root_);
    return os.str();
}

bool RationalExpr::structurallyEqual(const RationalExpr& other) const {
    if (arity_ != other.arity_) return false;
    if (!root_ || !other.root_) return root_ == other.root_;
    return nodesEqual(root_, other.root_);
}

RationalExpr RationalExpr::reindexed(int offset, int newArity) const {
    if (!root_) return RationalExpr(newArity, nullptr);
    return RationalExpr(newArity, reindexNode(root_, offset));
}

RationalExpr RationalExpr::constant(int arity, const Rational& c) {
    return RationalExpr(arity, makeConst(c));
}
RationalExpr RationalExpr::variable(int arity, int index) {
    return RationalExpr(arity, makeVar(index));
}
RationalExpr RationalExpr::add(const RationalExpr& a, const RationalExpr& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("expression arities differ");
    return RationalExpr(a.arity(), makeBinary(ExprNode::Kind::Add, a.root(), b.root()));
}
RationalExpr RationalExpr::sub(const RationalExpr& a, const RationalExpr& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("expression arities differ");
    return RationalExpr(a.arity(), makeBinary(ExprNode::Kind::Sub, a.root(), b.root()));
}
RationalExpr RationalExpr::mul(const RationalExpr& a, const RationalExpr& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("expression arities differ");
    return RationalExpr(a.arity(), makeBinary(ExprNode::Kind::Mul, a.root(), b.root()));
}
RationalExpr RationalExpr::div(const RationalExpr& a, const RationalExpr& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("expression arities differ");
    return RationalExpr(a.arity(), makeBinary(ExprNode::Kind::Div, a.root(), b.root()));
}
RationalExpr RationalExpr::pow(const RationalExpr& a, long e) {
    return RationalExpr(a.arity(), makePow(a.root(), e));
}

RationalExpr parseExpr(const std::string& text, int arity) {
    if (arity < 0) throw InvalidArgument("negative arity");
    return Parser(text, arity).run();
}

}  // namespace diaglab
