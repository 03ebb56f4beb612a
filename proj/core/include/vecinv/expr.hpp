#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vecinv/canonical.hpp"

namespace vecinv {

// Immutable symbolic expression tree. Copies share structure.
class Expression {
public:
    enum class Kind { Constant, Variable, Sum, Product, Power, Apply, Negate };

    // The constant zero.
    Expression();
    Expression(const Rational& value);  // NOLINT: implicit from numbers is convenient
    Expression(long value);             // NOLINT
    Expression(int value) : Expression(static_cast<long>(value)) {}  // NOLINT

    static Expression constant(const Rational& value);
    static Expression variable(std::string name);
    // Collapse to 0 / the single child when given fewer than two children.
    static Expression sum(std::vector<Expression> children);
    static Expression product(std::vector<Expression> children);
    // exponent 0 yields the constant 1.
    static Expression power(Expression base, long exponent);
    static Expression apply(Function fn, Expression argument);
    static Expression negate(Expression child);

    Kind kind() const noexcept;
    const Rational& value() const;
    const std::string& name() const;
    const std::vector<Expression>& children() const;
    long exponent() const;
    Function function() const;

    friend Expression operator+(const Expression& lhs, const Expression& rhs);
    friend Expression operator-(const Expression& lhs, const Expression& rhs);
    friend Expression operator*(const Expression& lhs, const Expression& rhs);
    friend Expression operator-(const Expression& child);

    struct Node;

private:
    explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Expression pow(const Expression& base, long exponent);
Expression sin(const Expression& argument);
Expression cos(const Expression& argument);
Expression exp(const Expression& argument);
Expression ln(const Expression& argument);

// Fully expanded normal form. Throws DomainError for a zero base raised to a
// negative power or ln of a non-positive constant, and Unsupported for a
// negative power of a multi-term sum.
CanonicalForm canonicalize(const Expression& e);

// Sum-of-products tree with the same canonical form.
Expression to_expression(const CanonicalForm& form);

// Replaces every occurrence of `var`, including inside function arguments.
Expression substitute(const Expression& e, std::string_view var, const Expression& value);
CanonicalForm substitute(const CanonicalForm& form, std::string_view var, const CanonicalForm& value);

using Point = std::map<std::string, double, std::less<>>;

// Double-precision evaluation. Throws UnboundVariable or DomainError.
double eval_numeric(const Expression& e, const Point& point);

bool equals(const Expression& lhs, const Expression& rhs);

// Names of every variable in e (coordinates and symbolic constants).
std::vector<std::string> free_variables(const Expression& e);

}  // namespace vecinv
