#include "eifforge/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>
#include <vector>

#include "eifforge/errors.hpp"

namespace eifforge {

using Op = ExprNode::Op;

ExprPtr expr_literal(double v) {
    auto n = std::make_shared<ExprNode>();
    n->op = Op::Literal;
    n->literal = v;
    return n;
}

ExprPtr expr_column(std::string name) {
    auto n = std::make_shared<ExprNode>();
    n->op = Op::Column;
    n->column = std::move(name);
    return n;
}

ExprPtr expr_parent(int id) {
    auto n = std::make_shared<ExprNode>();
    n->op = Op::Parent;
    n->parent = id;
    return n;
}

ExprPtr expr_unary(Op op, ExprPtr operand) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = std::move(operand);
    return n;
}

ExprPtr expr_binary(Op op, ExprPtr lhs, ExprPtr rhs) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

double eval_expr(const ExprPtr& e, const ExprContext& ctx) {
    switch (e->op) {
    case Op::Literal: return e->literal;
    case Op::Column: return ctx.column(e->column);
    case Op::Parent: return ctx.parent(e->parent);
    case Op::Add: return eval_expr(e->lhs, ctx) + eval_expr(e->rhs, ctx);
    case Op::Sub: return eval_expr(e->lhs, ctx) - eval_expr(e->rhs, ctx);
    case Op::Mul: return eval_expr(e->lhs, ctx) * eval_expr(e->rhs, ctx);
    case Op::Div: {
        double num = eval_expr(e->lhs, ctx);
        double den = eval_expr(e->rhs, ctx);
        if (den == 0.0) throw numeric_error("division by zero in expression");
        return num / den;
    }
    case Op::Pow: {
        double base = eval_expr(e->lhs, ctx);
        double exponent = eval_expr(e->rhs, ctx);
        double v = std::pow(base, exponent);
        if (!std::isfinite(v)) throw numeric_error("non-finite power in expression");
        return v;
    }
    case Op::Neg: return -eval_expr(e->lhs, ctx);
    case Op::Exp: {
        double v = std::exp(eval_expr(e->lhs, ctx));
        if (!std::isfinite(v)) throw numeric_error("exp overflow in expression");
        return v;
    }
    case Op::Log: {
        double arg = eval_expr(e->lhs, ctx);
        if (arg <= 0.0) throw numeric_error("log of non-positive value in expression");
        return std::log(arg);
    }
    }
    throw numeric_error("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { Number, Ident, ParentRef, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    double number = 0.0;
    std::string text;
    int parent = 0;
    size_t pos = 0;
};

[[noreturn]] void parse_fail(const std::string& msg, size_t pos) {
    throw data_error("expression parse error at position " + std::to_string(pos) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* start = s.c_str() + i;
            char* end = nullptr;
            double v = std::strtod(start, &end);
            if (end == start) parse_fail("malformed number", i);
            t.kind = Token::Kind::Number;
            t.number = v;
            i += static_cast<size_t>(end - start);
        } else if (c == '$') {
            size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i + 1) parse_fail("'$' must be followed by a node id", i);
            t.kind = Token::Kind::ParentRef;
            t.parent = std::atoi(s.substr(i + 1, j - i - 1).c_str());
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
                ++j;
            }
            t.kind = Token::Kind::Ident;
            t.text = s.substr(i, j - i);
            i = j;
        } else {
            switch (c) {
            case '+': t.kind = Token::Kind::Plus; break;
            case '-': t.kind = Token::Kind::Minus; break;
            case '*': t.kind = Token::Kind::Star; break;
            case '/': t.kind = Token::Kind::Slash; break;
            case '^': t.kind = Token::Kind::Caret; break;
            case '(': t.kind = Token::Kind::LParen; break;
            case ')': t.kind = Token::Kind::RParen; break;
            default: parse_fail(std::string("unexpected character '") + c + "'", i);
            }
            ++i;
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = parse_addsub();
        if (peek().kind != Token::Kind::End) {
            parse_fail("unexpected token '" + describe(peek()) + "'", peek().pos);
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& take() { return tokens_[at_++]; }

    static std::string describe(const Token& t) {
        switch (t.kind) {
        case Token::Kind::Number: return "number";
        case Token::Kind::Ident: return t.text;
        case Token::Kind::ParentRef: return "$" + std::to_string(t.parent);
        case Token::Kind::Plus: return "+";
        case Token::Kind::Minus: return "-";
        case Token::Kind::Star: return "*";
        case Token::Kind::Slash: return "/";
        case Token::Kind::Caret: return "^";
        case Token::Kind::LParen: return "(";
        case Token::Kind::RParen: return ")";
        case Token::Kind::End: return "end of input";
        }
        return "?";
    }

    ExprPtr parse_addsub() {
        ExprPtr e = parse_muldiv();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            Op op = take().kind == Token::Kind::Plus ? Op::Add : Op::Sub;
            e = expr_binary(op, e, parse_muldiv());
        }
        return e;
    }

    ExprPtr parse_muldiv() {
        ExprPtr e = parse_unary();
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
            Op op = take().kind == Token::Kind::Star ? Op::Mul : Op::Div;
            e = expr_binary(op, e, parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (peek().kind == Token::Kind::Minus) {
            take();
            return expr_unary(Op::Neg, parse_unary());
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek().kind == Token::Kind::Caret) {
            take();
            // right-associative; the exponent may carry a unary minus
            return expr_binary(Op::Pow, base, parse_unary());
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token& t = take();
        switch (t.kind) {
        case Token::Kind::Number: return expr_literal(t.number);
        case Token::Kind::ParentRef: return expr_parent(t.parent);
        case Token::Kind::Ident: {
            if (peek().kind == Token::Kind::LParen) {
                Op op;
                if (t.text == "exp") {
                    op = Op::Exp;
                } else if (t.text == "log") {
                    op = Op::Log;
                } else {
                    parse_fail("unknown function '" + t.text + "'", t.pos);
                }
                take(); // '('
                ExprPtr arg = parse_addsub();
                if (peek().kind != Token::Kind::RParen) {
                    parse_fail("expected ')'", peek().pos);
                }
                take();
                return expr_unary(op, arg);
            }
            return expr_column(t.text);
        }
        case Token::Kind::LParen: {
            ExprPtr e = parse_addsub();
            if (peek().kind != Token::Kind::RParen) {
                parse_fail("expected ')'", peek().pos);
            }
            take();
            return e;
        }
        default:
            parse_fail("unexpected token '" + describe(t) + "'", t.pos);
        }
    }

    std::vector<Token> tokens_;
    size_t at_ = 0;
};

} // namespace

ExprPtr parse_expr(const std::string& text) {
    return Parser(tokenize(text)).run();
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// precedence: + - (1) < * / (2) < unary minus (3) < ^ (4) < atoms (5)
int precedence(Op op) {
    switch (op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    default: return 5;
    }
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void print_rec(const ExprPtr& e, std::string& out) {
    auto child = [&out](const ExprPtr& c, bool needs_parens) {
        if (needs_parens) out += '(';
        print_rec(c, out);
        if (needs_parens) out += ')';
    };
    int p = precedence(e->op);
    switch (e->op) {
    case Op::Literal: out += format_number(e->literal); return;
    case Op::Column: out += e->column; return;
    case Op::Parent:
        out += '$';
        out += std::to_string(e->parent);
        return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
        child(e->lhs, precedence(e->lhs->op) < p);
        switch (e->op) {
        case Op::Add: out += " + "; break;
        case Op::Sub: out += " - "; break;
        case Op::Mul: out += " * "; break;
        default: out += " / "; break;
        }
        // left-associative: equal precedence on the right needs parentheses
        child(e->rhs, precedence(e->rhs->op) <= p);
        return;
    }
    case Op::Pow:
        // right-associative: equal precedence on the left needs parentheses
        child(e->lhs, precedence(e->lhs->op) <= p);
        out += '^';
        child(e->rhs, precedence(e->rhs->op) < p);
        return;
    case Op::Neg:
        out += '-';
        child(e->lhs, precedence(e->lhs->op) <= p);
        return;
    case Op::Exp:
    case Op::Log:
        out += e->op == Op::Exp ? "exp(" : "log(";
        print_rec(e->lhs, out);
        out += ')';
        return;
    }
}

} // namespace

std::string print_expr(const ExprPtr& e) {
    std::string out;
    print_rec(e, out);
    return out;
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

namespace {

bool is_literal(const ExprPtr& e, double v) {
    return e->op == Op::Literal && e->literal == v;
}

// light simplification so derivative trees stay readable and cheap to evaluate
ExprPtr s_add(ExprPtr a, ExprPtr b) {
    if (is_literal(a, 0.0)) return b;
    if (is_literal(b, 0.0)) return a;
    if (a->op == Op::Literal && b->op == Op::Literal) return expr_literal(a->literal + b->literal);
    return expr_binary(Op::Add, std::move(a), std::move(b));
}

ExprPtr s_sub(ExprPtr a, ExprPtr b) {
    if (is_literal(b, 0.0)) return a;
    if (is_literal(a, 0.0)) return expr_unary(Op::Neg, std::move(b));
    if (a->op == Op::Literal && b->op == Op::Literal) return expr_literal(a->literal - b->literal);
    return expr_binary(Op::Sub, std::move(a), std::move(b));
}

ExprPtr s_mul(ExprPtr a, ExprPtr b) {
    if (is_literal(a, 0.0) || is_literal(b, 0.0)) return expr_literal(0.0);
    if (is_literal(a, 1.0)) return b;
    if (is_literal(b, 1.0)) return a;
    if (a->op == Op::Literal && b->op == Op::Literal) return expr_literal(a->literal * b->literal);
    return expr_binary(Op::Mul, std::move(a), std::move(b));
}

ExprPtr s_div(ExprPtr a, ExprPtr b) {
    if (is_literal(a, 0.0)) return expr_literal(0.0);
    if (is_literal(b, 1.0)) return a;
    return expr_binary(Op::Div, std::move(a), std::move(b));
}

ExprPtr s_pow(ExprPtr a, ExprPtr b) {
    if (is_literal(b, 1.0)) return a;
    if (is_literal(b, 0.0)) return expr_literal(1.0);
    return expr_binary(Op::Pow, std::move(a), std::move(b));
}

ExprPtr s_neg(ExprPtr a) {
    if (is_literal(a, 0.0)) return a;
    if (a->op == Op::Literal) return expr_literal(-a->literal);
    if (a->op == Op::Neg) return a->lhs;
    return expr_unary(Op::Neg, std::move(a));
}

} // namespace

ExprPtr diff_expr(const ExprPtr& e, int parent_id) {
    switch (e->op) {
    case Op::Literal:
    case Op::Column: return expr_literal(0.0);
    case Op::Parent: return expr_literal(e->parent == parent_id ? 1.0 : 0.0);
    case Op::Add: return s_add(diff_expr(e->lhs, parent_id), diff_expr(e->rhs, parent_id));
    case Op::Sub: return s_sub(diff_expr(e->lhs, parent_id), diff_expr(e->rhs, parent_id));
    case Op::Mul:
        return s_add(s_mul(diff_expr(e->lhs, parent_id), e->rhs),
                     s_mul(e->lhs, diff_expr(e->rhs, parent_id)));
    case Op::Div:
        // (l'r - lr') / r^2
        return s_div(s_sub(s_mul(diff_expr(e->lhs, parent_id), e->rhs),
                           s_mul(e->lhs, diff_expr(e->rhs, parent_id))),
                     s_pow(e->rhs, expr_literal(2.0)));
    case Op::Pow: {
        ExprPtr dl = diff_expr(e->lhs, parent_id);
        ExprPtr dr = diff_expr(e->rhs, parent_id);
        if (e->rhs->op == Op::Literal) {
            // c * l^(c-1) * l'
            double c = e->rhs->literal;
            return s_mul(s_mul(expr_literal(c), s_pow(e->lhs, expr_literal(c - 1.0))), dl);
        }
        // l^r * (r' log l + r l'/l)
        ExprPtr term = s_add(s_mul(dr, expr_unary(Op::Log, e->lhs)),
                             s_mul(e->rhs, s_div(dl, e->lhs)));
        return s_mul(e, term);
    }
    case Op::Neg: return s_neg(diff_expr(e->lhs, parent_id));
    case Op::Exp: return s_mul(e, diff_expr(e->lhs, parent_id));
    case Op::Log: return s_div(diff_expr(e->lhs, parent_id), e->lhs);
    }
    throw numeric_error("corrupt expression node");
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->op != b->op) return false;
    switch (a->op) {
    case Op::Literal: return a->literal == b->literal;
    case Op::Column: return a->column == b->column;
    case Op::Parent: return a->parent == b->parent;
    case Op::Neg:
    case Op::Exp:
    case Op::Log: return expr_equal(a->lhs, b->lhs);
    default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

void collect_expr_refs(const ExprPtr& e, std::set<std::string>& columns, std::set<int>& parents) {
    if (!e) return;
    switch (e->op) {
    case Op::Literal: return;
    case Op::Column: columns.insert(e->column); return;
    case Op::Parent: parents.insert(e->parent); return;
    default:
        collect_expr_refs(e->lhs, columns, parents);
        collect_expr_refs(e->rhs, columns, parents);
    }
}

} // namespace eifforge
