#include "digifix/expression.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "digifix/errors.hpp"

namespace digifix {

struct Expression::Node {
    enum class Op { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Sqrt, Root };
    Op op = Op::Number;
    Rational number;
    unsigned exponent = 0;  // Pow and Root
    std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct EvalError {
    EvalFailure failure;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse()
    {
        NodePtr node = expr();
        skip_space();
        if (pos_ != text_.size()) error("unexpected character");
        return node;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& what) const
    {
        throw InputError("expression '" + std::string(text_) + "': " + what + " at column " +
                         std::to_string(pos_ + 1));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view word)
    {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t end = pos_ + word.size();
        if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
            return false;
        }
        pos_ = end;
        return true;
    }

    static NodePtr make(Node::Op op, std::vector<NodePtr> args, unsigned exponent = 0)
    {
        auto node = std::make_shared<Node>();
        node->op = op;
        node->args = std::move(args);
        node->exponent = exponent;
        return node;
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        while (true) {
            if (accept('+')) {
                lhs = make(Node::Op::Add, {lhs, term()});
            } else if (accept('-')) {
                lhs = make(Node::Op::Sub, {lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term()
    {
        NodePtr lhs = unary();
        while (true) {
            if (accept('*')) {
                lhs = make(Node::Op::Mul, {lhs, unary()});
            } else if (accept('/')) {
                lhs = make(Node::Op::Div, {lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary()
    {
        if (accept('-')) return make(Node::Op::Negate, {unary()});
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power()
    {
        NodePtr base = atom();
        if (accept('^')) return make(Node::Op::Pow, {base}, small_integer());
        return base;
    }

    unsigned small_integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("expected a nonnegative integer");
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 4) error("integer too large");
        return static_cast<unsigned>(std::stoul(digits));
    }

    NodePtr atom()
    {
        skip_space();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
                ++pos_;
            }
            auto node = std::make_shared<Node>();
            node->op = Node::Op::Number;
            try {
                node->number = parse_rational(text_.substr(start, pos_ - start));
            } catch (const InputError&) {
                pos_ = start;
                error("malformed number");
            }
            return node;
        }
        if (accept('(')) {
            NodePtr inner = expr();
            expect(')');
            return inner;
        }
        if (accept_word("sqrt")) {
            expect('(');
            NodePtr inner = expr();
            expect(')');
            return make(Node::Op::Sqrt, {inner});
        }
        if (accept_word("root")) {
            expect('(');
            NodePtr inner = expr();
            expect(',');
            const unsigned index = small_integer();
            if (index == 0) error("root index must be positive");
            expect(')');
            return make(Node::Op::Root, {inner}, index);
        }
        if (accept_word("x")) {
            auto node = std::make_shared<Node>();
            node->op = Node::Op::Variable;
            return node;
        }
        error("unexpected character");
    }
};

Real eval(const Node& node, const std::optional<Real>& x)
{
    auto arg = [&](std::size_t i) { return eval(*node.args[i], x); };
    switch (node.op) {
    case Node::Op::Number:
        return Real(node.number);
    case Node::Op::Variable:
        if (!x) throw EvalError{{EvalFailure::Kind::Unsupported, "variable x is unbound"}};
        return *x;
    case Node::Op::Negate:
        return -arg(0);
    case Node::Op::Add:
        return arg(0) + arg(1);
    case Node::Op::Sub:
        return arg(0) - arg(1);
    case Node::Op::Mul:
        return arg(0) * arg(1);
    case Node::Op::Div: {
        Real num = arg(0);
        Real den = arg(1);
        if (den.is_zero()) throw EvalError{{EvalFailure::Kind::DivisionByZero, "division by zero"}};
        return num / den;
    }
    case Node::Op::Pow: {
        const Real base = arg(0);
        Real out(1);
        for (unsigned i = 0; i < node.exponent; ++i) out *= base;
        return out;
    }
    case Node::Op::Sqrt:
    case Node::Op::Root: {
        const Real inner = arg(0);
        const unsigned index = node.op == Node::Op::Sqrt ? 2u : node.exponent;
        if (inner.sign() < 0) {
            if (index % 2 == 1) {
                try {
                    return -(-inner).nth_root(index);
                } catch (const InputError& e) {
                    throw EvalError{{EvalFailure::Kind::Unsupported, e.what()}};
                }
            }
            throw EvalError{{EvalFailure::Kind::NotReal, "even root of negative value " + inner.to_string()}};
        }
        try {
            return inner.nth_root(index);
        } catch (const InputError& e) {
            throw EvalError{{EvalFailure::Kind::Unsupported, e.what()}};
        }
    }
    }
    throw std::logic_error("unhandled expression node");
}

bool mentions_x(const Node& node)
{
    if (node.op == Node::Op::Variable) return true;
    for (const auto& child : node.args) {
        if (mentions_x(*child)) return true;
    }
    return false;
}

}  // namespace

Expression Expression::parse(std::string_view text)
{
    Expression out;
    out.text_ = std::string(text);
    out.root_ = Parser(text).parse();
    return out;
}

EvalResult Expression::evaluate(const std::optional<Real>& x) const
{
    try {
        return eval(*root_, x);
    } catch (const EvalError& e) {
        return e.failure;
    }
}

bool Expression::uses_variable() const { return mentions_x(*root_); }

Real parse_real(std::string_view text)
{
    const Expression expr = Expression::parse(text);
    EvalResult result = expr.evaluate();
    if (auto* failure = std::get_if<EvalFailure>(&result)) {
        throw InputError("expression '" + std::string(text) + "' has no real value: " + failure->detail);
    }
    return std::get<Real>(std::move(result));
}

}  // namespace digifix
