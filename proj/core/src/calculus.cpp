#include "vecinv/calculus.hpp"

#include <optional>
#include <vector>

#include "vecinv/errors.hpp"

namespace vecinv {

namespace canonical {

Split split_by_variable(const CanonicalForm& form, std::string_view var) {
    std::vector<Term> plus;
    std::vector<Term> minus;
    for (const auto& t : form.terms()) {
        (t.depends_on(var) ? plus : minus).push_back(t);
    }
    return {CanonicalForm::from_terms(std::move(plus)), CanonicalForm::from_terms(std::move(minus))};
}

namespace {

CanonicalForm differentiate_atom(const Atom& atom, std::string_view var) {
    if (atom.is_variable()) {
        return atom.name() == var ? CanonicalForm::constant(Rational(1)) : CanonicalForm{};
    }
    const CanonicalForm& arg = atom.argument();
    CanonicalForm inner = differentiate(arg, var);
    if (inner.is_zero()) return {};
    switch (atom.function()) {
        case Function::Sin: return apply_function(Function::Cos, arg) * inner;
        case Function::Cos: return -(apply_function(Function::Sin, arg) * inner);
        case Function::Exp: return CanonicalForm::atom(atom) * inner;
        case Function::Ln: {
            auto inverse = arg.reciprocal();
            if (!inverse) {
                throw Unsupported("derivative of ln(" + render(arg) + ") leaves the term class");
            }
            return inner * *inverse;
        }
    }
    return {};
}

}  // namespace

CanonicalForm differentiate(const CanonicalForm& form, std::string_view var) {
    std::vector<Term> out;
    for (const auto& t : form.terms()) {
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            const Factor& f = t.factors[i];
            if (!f.atom.depends_on(var)) continue;
            CanonicalForm d_atom = differentiate_atom(f.atom, var);
            if (d_atom.is_zero()) continue;
            // coefficient * exponent * atom^(exponent-1) * (other factors) * d(atom)
            Term rest{t.coefficient * f.exponent, {}};
            rest.factors.reserve(t.factors.size());
            for (std::size_t j = 0; j < t.factors.size(); ++j) {
                if (j != i) {
                    rest.factors.push_back(t.factors[j]);
                } else if (f.exponent != 1) {
                    rest.factors.push_back({f.atom, f.exponent - 1});
                }
            }
            CanonicalForm product = term_form(rest) * d_atom;
            out.insert(out.end(), product.terms().begin(), product.terms().end());
        }
    }
    return CanonicalForm::from_terms(std::move(out));
}

namespace {

// Integral of v^n * fn(a*v + b) for n >= 0, by repeated integration by parts.
CanonicalForm integrate_power_times_function(long n, Function fn, const CanonicalForm& argument,
                                             const Rational& slope, std::string_view var) {
    const CanonicalForm v_n = CanonicalForm::variable(std::string(var)).pow(n);
    const Rational inv_slope = 1 / slope;
    switch (fn) {
        case Function::Exp: {
            // e/a * v^n - (n/a) * I(n-1)
            CanonicalForm head = v_n * apply_function(Function::Exp, argument);
            head = head.scaled(inv_slope);
            if (n == 0) return head;
            return head - integrate_power_times_function(n - 1, fn, argument, slope, var)
                              .scaled(Rational(n) * inv_slope);
        }
        case Function::Sin: {
            // -v^n cos/a + (n/a) * Icos(n-1)
            CanonicalForm head = (v_n * apply_function(Function::Cos, argument)).scaled(-inv_slope);
            if (n == 0) return head;
            return head + integrate_power_times_function(n - 1, Function::Cos, argument, slope, var)
                              .scaled(Rational(n) * inv_slope);
        }
        case Function::Cos: {
            // v^n sin/a - (n/a) * Isin(n-1)
            CanonicalForm head = (v_n * apply_function(Function::Sin, argument)).scaled(inv_slope);
            if (n == 0) return head;
            return head - integrate_power_times_function(n - 1, Function::Sin, argument, slope, var)
                              .scaled(Rational(n) * inv_slope);
        }
        case Function::Ln: break;
    }
    throw std::logic_error("ln is never integrated");
}

// Coefficient a when `argument` is a*v + (terms free of v), a != 0.
std::optional<Rational> linear_slope(const CanonicalForm& argument, std::string_view var) {
    std::optional<Rational> slope;
    for (const auto& t : argument.terms()) {
        if (!t.depends_on(var)) continue;
        if (slope || t.factors.size() != 1 || !t.factors.front().atom.is_variable() ||
            t.factors.front().exponent != 1) {
            return std::nullopt;
        }
        slope = t.coefficient;
    }
    return slope;
}

// Products of transcendental factors without a power of v. Only forms whose
// antiderivative differentiates back to the same canonical term are handled:
// exp(u)^m, sin(u)^m cos(u) and cos(u)^m sin(u), with u linear in v.
std::optional<CanonicalForm> integrate_function_power(const std::vector<const Factor*>& fns, std::string_view var) {
    const CanonicalForm& argument = fns.front()->atom.argument();
    auto slope = linear_slope(argument, var);
    if (!slope) return std::nullopt;
    for (const Factor* f : fns) {
        if (f->atom.argument() != argument) return std::nullopt;
    }
    auto raised = [&](Function fn, long m) {
        return apply_function(fn, argument).pow(m).scaled(Rational(1) / (Rational(m) * *slope));
    };
    if (fns.size() == 1 && fns.front()->atom.function() == Function::Exp) {
        return raised(Function::Exp, fns.front()->exponent);
    }
    if (fns.size() != 2) return std::nullopt;
    const Factor* sin_f = nullptr;
    const Factor* cos_f = nullptr;
    for (const Factor* f : fns) {
        if (f->atom.function() == Function::Sin) sin_f = f;
        if (f->atom.function() == Function::Cos) cos_f = f;
    }
    if (sin_f == nullptr || cos_f == nullptr) return std::nullopt;
    if (cos_f->exponent == 1 && sin_f->exponent != -1) return raised(Function::Sin, sin_f->exponent + 1);
    if (sin_f->exponent == 1 && cos_f->exponent != -1) return -raised(Function::Cos, cos_f->exponent + 1);
    return std::nullopt;
}

CanonicalForm antidifferentiate_term(const Term& t, std::string_view var) {
    if (!t.depends_on(var)) {
        return term_form(t) * CanonicalForm::variable(std::string(var));
    }
    long power = 0;
    std::vector<const Factor*> transcendental;
    Term rest{t.coefficient, {}};
    for (const auto& f : t.factors) {
        if (!f.atom.depends_on(var)) {
            rest.factors.push_back(f);
        } else if (f.atom.is_variable()) {
            power = f.exponent;
        } else {
            if (f.atom.function() == Function::Ln) throw NotIntegrable(render(t), std::string(var));
            transcendental.push_back(&f);
        }
    }
    const CanonicalForm rest_form = term_form(rest);
    const CanonicalForm v = CanonicalForm::variable(std::string(var));
    if (transcendental.empty()) {
        if (power == -1) {
            return rest_form * apply_function(Function::Ln, v);
        }
        return (rest_form * v.pow(power + 1)).scaled(Rational(1) / Rational(power + 1));
    }
    if (transcendental.size() == 1 && transcendental.front()->exponent == 1) {
        const Atom& atom = transcendental.front()->atom;
        auto slope = linear_slope(atom.argument(), var);
        if (power < 0 || !slope) throw NotIntegrable(render(t), std::string(var));
        return rest_form * integrate_power_times_function(power, atom.function(), atom.argument(), *slope, var);
    }
    if (power == 0) {
        if (auto r = integrate_function_power(transcendental, var)) return rest_form * *r;
    }
    throw NotIntegrable(render(t), std::string(var));
}

}  // namespace

CanonicalForm antidifferentiate(const CanonicalForm& form, std::string_view var) {
    CanonicalForm out;
    for (const auto& t : form.terms()) out += antidifferentiate_term(t, var);
    return out;
}

CanonicalForm weighted_split_integral(const CanonicalForm& form, std::string_view split_var,
                                      std::string_view int_var, const Rational& w_plus,
                                      const Rational& w_minus) {
    Split parts = split_by_variable(form, split_var);
    return antidifferentiate(parts.plus_part, int_var).scaled(w_plus) +
           antidifferentiate(parts.minus_part, int_var).scaled(w_minus);
}

}  // namespace canonical

bool contains_variable(const Expression& e, std::string_view var) { return canonicalize(e).depends_on(var); }

SplitPair split_by_variable(const Expression& e, std::string_view var) {
    auto parts = canonical::split_by_variable(canonicalize(e), var);
    return {to_expression(parts.plus_part), to_expression(parts.minus_part)};
}

Expression differentiate(const Expression& e, std::string_view var) {
    return to_expression(canonical::differentiate(canonicalize(e), var));
}

Expression antidifferentiate(const Expression& e, std::string_view var) {
    return to_expression(canonical::antidifferentiate(canonicalize(e), var));
}

Expression weighted_split_integral(const Expression& e, std::string_view split_var, std::string_view int_var,
                                   const Rational& w_plus, const Rational& w_minus) {
    return to_expression(
        canonical::weighted_split_integral(canonicalize(e), split_var, int_var, w_plus, w_minus));
}

}  // namespace vecinv
