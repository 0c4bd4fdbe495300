#pragma once

#include <memory>
#include <set>
#include <string>

namespace eifforge {

// Expression tree over column references, parent references ($3) and numeric
// literals. Operators: + - * / ^ (pow), unary minus, exp(), log().
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Op { Literal, Column, Parent, Add, Sub, Mul, Div, Pow, Neg, Exp, Log };

    Op op;
    double literal = 0.0;   // Op::Literal
    std::string column;     // Op::Column
    int parent = 0;         // Op::Parent
    ExprPtr lhs;            // binary ops and unary ops
    ExprPtr rhs;            // binary ops only
};

ExprPtr expr_literal(double v);
ExprPtr expr_column(std::string name);
ExprPtr expr_parent(int id);
ExprPtr expr_unary(ExprNode::Op op, ExprPtr operand);
ExprPtr expr_binary(ExprNode::Op op, ExprPtr lhs, ExprPtr rhs);

// Value source for the leaves during evaluation.
struct ExprContext {
    virtual ~ExprContext() = default;
    virtual double column(const std::string& name) const = 0;
    virtual double parent(int id) const = 0;
};

// Evaluates the tree. Throws numeric_error on division by zero, log of a
// non-positive value, or any non-finite intermediate.
double eval_expr(const ExprPtr& e, const ExprContext& ctx);

// Parses the expression mini-language. Precedence: ^ > unary minus > * / > + -,
// left-associative except ^ (right). Identifiers starting with '$' are parent
// references; bare identifiers are columns; exp(...) and log(...) are the only
// recognized functions. Throws data_error with a character position.
ExprPtr parse_expr(const std::string& text);

// Prints with minimal parentheses; parse_expr(print_expr(e)) reproduces e for
// any tree whose literals are non-negative (parser output always qualifies).
std::string print_expr(const ExprPtr& e);

// Symbolic partial derivative with respect to parent reference $id.
ExprPtr diff_expr(const ExprPtr& e, int parent_id);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

void collect_expr_refs(const ExprPtr& e, std::set<std::string>& columns, std::set<int>& parents);

} // namespace eifforge
