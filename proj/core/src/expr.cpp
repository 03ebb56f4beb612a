#include "vecinv/expr.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "vecinv/errors.hpp"

namespace vecinv {

struct Expression::Node {
    Kind kind;
    Rational value;                  // Constant
    std::string name;                // Variable
    std::vector<Expression> children;  // Sum, Product; single child for Power/Apply/Negate
    long exponent = 0;               // Power
    Function function = Function::Sin;  // Apply
};

namespace {

std::shared_ptr<Expression::Node> make_node(Expression::Kind kind) {
    auto node = std::make_shared<Expression::Node>();
    node->kind = kind;
    return node;
}

}  // namespace

Expression::Expression() : Expression(Rational(0)) {}

Expression::Expression(const Rational& value) {
    auto node = make_node(Kind::Constant);
    node->value = value;
    node->value.canonicalize();
    node_ = std::move(node);
}

Expression::Expression(long value) : Expression(Rational(value)) {}

Expression Expression::constant(const Rational& value) { return Expression(value); }

Expression Expression::variable(std::string name) {
    auto node = make_node(Kind::Variable);
    node->name = std::move(name);
    return Expression(std::shared_ptr<const Node>(std::move(node)));
}

Expression Expression::sum(std::vector<Expression> children) {
    if (children.empty()) return Expression();
    if (children.size() == 1) return children.front();
    auto node = make_node(Kind::Sum);
    node->children = std::move(children);
    return Expression(std::shared_ptr<const Node>(std::move(node)));
}

Expression Expression::product(std::vector<Expression> children) {
    if (children.empty()) return Expression(1L);
    if (children.size() == 1) return children.front();
    auto node = make_node(Kind::Product);
    node->children = std::move(children);
    return Expression(std::shared_ptr<const Node>(std::move(node)));
}

Expression Expression::power(Expression base, long exponent) {
    if (exponent == 0) return Expression(1L);
    auto node = make_node(Kind::Power);
    node->children.push_back(std::move(base));
    node->exponent = exponent;
    return Expression(std::shared_ptr<const Node>(std::move(node)));
}

Expression Expression::apply(Function fn, Expression argument) {
    auto node = make_node(Kind::Apply);
    node->children.push_back(std::move(argument));
    node->function = fn;
    return Expression(std::shared_ptr<const Node>(std::move(node)));
}

Expression Expression::negate(Expression child) {
    auto node = make_node(Kind::Negate);
    node->children.push_back(std::move(child));
    return Expression(std::shared_ptr<const Node>(std::move(node)));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }
const Rational& Expression::value() const { return node_->value; }
const std::string& Expression::name() const { return node_->name; }
const std::vector<Expression>& Expression::children() const { return node_->children; }
long Expression::exponent() const { return node_->exponent; }
Function Expression::function() const { return node_->function; }

Expression operator+(const Expression& lhs, const Expression& rhs) { return Expression::sum({lhs, rhs}); }
Expression operator-(const Expression& lhs, const Expression& rhs) {
    return Expression::sum({lhs, Expression::negate(rhs)});
}
Expression operator*(const Expression& lhs, const Expression& rhs) { return Expression::product({lhs, rhs}); }
Expression operator-(const Expression& child) { return Expression::negate(child); }

Expression pow(const Expression& base, long exponent) { return Expression::power(base, exponent); }
Expression sin(const Expression& argument) { return Expression::apply(Function::Sin, argument); }
Expression cos(const Expression& argument) { return Expression::apply(Function::Cos, argument); }
Expression exp(const Expression& argument) { return Expression::apply(Function::Exp, argument); }
Expression ln(const Expression& argument) { return Expression::apply(Function::Ln, argument); }

CanonicalForm canonicalize(const Expression& e) {
    using Kind = Expression::Kind;
    switch (e.kind()) {
        case Kind::Constant: return CanonicalForm::constant(e.value());
        case Kind::Variable: return CanonicalForm::variable(e.name());
        case Kind::Sum: {
            CanonicalForm out;
            for (const auto& c : e.children()) out += canonicalize(c);
            return out;
        }
        case Kind::Product: {
            CanonicalForm out = CanonicalForm::constant(Rational(1));
            for (const auto& c : e.children()) {
                out *= canonicalize(c);
                if (out.is_zero()) break;
            }
            return out;
        }
        case Kind::Power: return canonicalize(e.children().front()).pow(e.exponent());
        case Kind::Apply: return apply_function(e.function(), canonicalize(e.children().front()));
        case Kind::Negate: return -canonicalize(e.children().front());
    }
    throw std::logic_error("unreachable expression kind");
}

namespace {

Expression atom_expression(const Atom& atom) {
    if (atom.is_variable()) return Expression::variable(atom.name());
    return Expression::apply(atom.function(), to_expression(atom.argument()));
}

}  // namespace

Expression to_expression(const CanonicalForm& form) {
    std::vector<Expression> terms;
    terms.reserve(form.terms().size());
    for (const auto& t : form.terms()) {
        std::vector<Expression> factors;
        if (t.coefficient != 1 || t.factors.empty()) factors.emplace_back(t.coefficient);
        for (const auto& f : t.factors) {
            Expression base = atom_expression(f.atom);
            factors.push_back(f.exponent == 1 ? base : Expression::power(base, f.exponent));
        }
        terms.push_back(Expression::product(std::move(factors)));
    }
    return Expression::sum(std::move(terms));
}

Expression substitute(const Expression& e, std::string_view var, const Expression& value) {
    using Kind = Expression::Kind;
    switch (e.kind()) {
        case Kind::Constant: return e;
        case Kind::Variable: return e.name() == var ? value : e;
        case Kind::Sum:
        case Kind::Product: {
            std::vector<Expression> children;
            children.reserve(e.children().size());
            for (const auto& c : e.children()) children.push_back(substitute(c, var, value));
            return e.kind() == Kind::Sum ? Expression::sum(std::move(children))
                                         : Expression::product(std::move(children));
        }
        case Kind::Power: return Expression::power(substitute(e.children().front(), var, value), e.exponent());
        case Kind::Apply: return Expression::apply(e.function(), substitute(e.children().front(), var, value));
        case Kind::Negate: return Expression::negate(substitute(e.children().front(), var, value));
    }
    throw std::logic_error("unreachable expression kind");
}

CanonicalForm substitute(const CanonicalForm& form, std::string_view var, const CanonicalForm& value) {
    if (!form.depends_on(var)) return form;
    CanonicalForm out;
    for (const auto& t : form.terms()) {
        if (!t.depends_on(var)) {
            out += term_form(t);
            continue;
        }
        CanonicalForm product = CanonicalForm::constant(t.coefficient);
        for (const auto& f : t.factors) {
            if (f.atom.is_variable()) {
                if (f.atom.name() == var) {
                    product *= value.pow(f.exponent);
                } else {
                    product *= CanonicalForm::atom(f.atom, f.exponent);
                }
            } else {
                CanonicalForm argument = substitute(f.atom.argument(), var, value);
                product *= apply_function(f.atom.function(), argument).pow(f.exponent);
            }
        }
        out += product;
    }
    return out;
}

double eval_numeric(const Expression& e, const Point& point) {
    using Kind = Expression::Kind;
    switch (e.kind()) {
        case Kind::Constant: return e.value().get_d();
        case Kind::Variable: {
            auto it = point.find(e.name());
            if (it == point.end()) throw UnboundVariable("no value bound for variable '" + e.name() + "'");
            return it->second;
        }
        case Kind::Sum: {
            double s = 0.0;
            for (const auto& c : e.children()) s += eval_numeric(c, point);
            return s;
        }
        case Kind::Product: {
            double p = 1.0;
            for (const auto& c : e.children()) p *= eval_numeric(c, point);
            return p;
        }
        case Kind::Power: {
            double base = eval_numeric(e.children().front(), point);
            if (base == 0.0 && e.exponent() < 0) throw DomainError("division by zero");
            return std::pow(base, static_cast<double>(e.exponent()));
        }
        case Kind::Apply: {
            double arg = eval_numeric(e.children().front(), point);
            switch (e.function()) {
                case Function::Sin: return std::sin(arg);
                case Function::Cos: return std::cos(arg);
                case Function::Exp: return std::exp(arg);
                case Function::Ln:
                    if (!(arg > 0.0)) throw DomainError("ln of non-positive value");
                    return std::log(arg);
            }
            break;
        }
        case Kind::Negate: return -eval_numeric(e.children().front(), point);
    }
    throw std::logic_error("unreachable expression kind");
}

bool equals(const Expression& lhs, const Expression& rhs) { return canonicalize(lhs) == canonicalize(rhs); }

namespace {

void collect_variables(const Expression& e, std::set<std::string>& out) {
    if (e.kind() == Expression::Kind::Variable) {
        out.insert(e.name());
        return;
    }
    for (const auto& c : e.children()) collect_variables(c, out);
}

}  // namespace

std::vector<std::string> free_variables(const Expression& e) {
    std::set<std::string> names;
    collect_variables(e, names);
    return {names.begin(), names.end()};
}

}  // namespace vecinv
