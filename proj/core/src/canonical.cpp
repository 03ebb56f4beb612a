#include "vecinv/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vecinv/errors.hpp"

namespace vecinv {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string_view function_name(Function fn) noexcept {
    switch (fn) {
        case Function::Sin: return "sin";
        case Function::Cos: return "cos";
        case Function::Exp: return "exp";
        case Function::Ln: return "ln";
    }
    return "?";
}

std::optional<Function> function_from_name(std::string_view name) noexcept {
    if (name == "sin") return Function::Sin;
    if (name == "cos") return Function::Cos;
    if (name == "exp") return Function::Exp;
    if (name == "ln") return Function::Ln;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Atom

Atom Atom::variable(std::string name) {
    Atom atom;
    atom.name_ = std::move(name);
    return atom;
}

Atom Atom::apply(Function fn, CanonicalForm argument) {
    Atom atom;
    atom.name_ = std::string(function_name(fn));
    atom.function_ = fn;
    atom.argument_ = std::make_shared<const CanonicalForm>(std::move(argument));
    return atom;
}

bool Atom::depends_on(std::string_view var) const {
    if (is_variable()) return name_ == var;
    return argument_->depends_on(var);
}

bool operator==(const Atom& lhs, const Atom& rhs) { return (lhs <=> rhs) == 0; }

std::strong_ordering operator<=>(const Atom& lhs, const Atom& rhs) {
    if (auto c = lhs.name_.compare(rhs.name_); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (lhs.is_variable() != rhs.is_variable()) {
        return lhs.is_variable() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (lhs.is_variable()) return std::strong_ordering::equal;
    if (lhs.argument_ == rhs.argument_) return std::strong_ordering::equal;
    return compare(*lhs.argument_, *rhs.argument_) <=> 0;
}

// ---------------------------------------------------------------------------
// Term helpers

bool Term::depends_on(std::string_view var) const {
    return std::any_of(factors.begin(), factors.end(),
                       [&](const Factor& f) { return f.atom.depends_on(var); });
}

long Term::exponent_of(std::string_view var) const {
    for (const auto& f : factors) {
        if (f.atom.is_variable() && f.atom.name() == var) return f.exponent;
    }
    return 0;
}

int compare_factor_lists(const FactorList& lhs, const FactorList& rhs) {
    const std::size_t n = std::min(lhs.size(), rhs.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = lhs[i].atom <=> rhs[i].atom;
        if (c != 0) return c < 0 ? -1 : 1;
        if (lhs[i].exponent != rhs[i].exponent) return lhs[i].exponent > rhs[i].exponent ? -1 : 1;
    }
    if (lhs.size() == rhs.size()) return 0;
    return lhs.size() > rhs.size() ? -1 : 1;
}

namespace {

struct FactorListLess {
    bool operator()(const FactorList& lhs, const FactorList& rhs) const {
        return compare_factor_lists(lhs, rhs) < 0;
    }
};

using TermMap = std::map<FactorList, Rational, FactorListLess>;

FactorList multiply_factors(const FactorList& lhs, const FactorList& rhs) {
    FactorList out;
    out.reserve(lhs.size() + rhs.size());
    auto a = lhs.begin();
    auto b = rhs.begin();
    while (a != lhs.end() && b != rhs.end()) {
        auto c = a->atom <=> b->atom;
        if (c < 0) {
            out.push_back(*a++);
        } else if (c > 0) {
            out.push_back(*b++);
        } else {
            long e = a->exponent + b->exponent;
            if (e != 0) out.push_back({a->atom, e});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, lhs.end());
    out.insert(out.end(), b, rhs.end());
    return out;
}

CanonicalForm from_map(TermMap&& map) {
    std::vector<Term> terms;
    terms.reserve(map.size());
    for (auto& [factors, coefficient] : map) {
        if (coefficient != 0) terms.push_back({coefficient, factors});
    }
    return CanonicalForm::from_terms(std::move(terms));
}

}  // namespace

// ---------------------------------------------------------------------------
// CanonicalForm

CanonicalForm CanonicalForm::constant(const Rational& value) {
    CanonicalForm form;
    if (value != 0) form.terms_.push_back({value, {}});
    return form;
}

CanonicalForm CanonicalForm::variable(std::string name) {
    return atom(Atom::variable(std::move(name)));
}

CanonicalForm CanonicalForm::atom(Atom atom, long exponent) {
    CanonicalForm form;
    if (exponent == 0) {
        form.terms_.push_back({Rational(1), {}});
    } else {
        form.terms_.push_back({Rational(1), {{std::move(atom), exponent}}});
    }
    return form;
}

CanonicalForm CanonicalForm::from_terms(std::vector<Term> terms) {
    const bool sorted_unique = std::is_sorted(terms.begin(), terms.end(),
                                              [](const Term& a, const Term& b) {
                                                  return compare_factor_lists(a.factors, b.factors) <= 0;
                                              }) &&
                               std::adjacent_find(terms.begin(), terms.end(),
                                                  [](const Term& a, const Term& b) {
                                                      return compare_factor_lists(a.factors, b.factors) == 0;
                                                  }) == terms.end() &&
                               std::none_of(terms.begin(), terms.end(),
                                            [](const Term& t) { return t.coefficient == 0; });
    CanonicalForm form;
    if (sorted_unique) {
        form.terms_ = std::move(terms);
        return form;
    }
    TermMap map;
    for (auto& t : terms) {
        map[std::move(t.factors)] += t.coefficient;
    }
    for (auto& [factors, coefficient] : map) {
        if (coefficient != 0) form.terms_.push_back({coefficient, factors});
    }
    return form;
}

bool CanonicalForm::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().factors.empty());
}

std::optional<Rational> CanonicalForm::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.front().factors.empty()) return terms_.front().coefficient;
    return std::nullopt;
}

bool CanonicalForm::depends_on(std::string_view var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.depends_on(var); });
}

CanonicalForm CanonicalForm::operator-() const { return scaled(Rational(-1)); }

CanonicalForm CanonicalForm::scaled(const Rational& factor) const {
    if (factor == 0) return {};
    CanonicalForm out = *this;
    for (auto& t : out.terms_) t.coefficient *= factor;
    return out;
}

CanonicalForm CanonicalForm::pow(long exponent) const {
    if (exponent < 0) {
        auto inverse = reciprocal();
        if (!inverse) {
            if (is_zero()) throw DomainError("zero raised to a negative power");
            throw Unsupported("negative power of a multi-term expression '" + render(*this) + "'");
        }
        return inverse->pow(-exponent);
    }
    CanonicalForm result = constant(Rational(1));
    if (terms_.size() == 1) {
        // Single term: power the factors directly.
        const Term& t = terms_.front();
        Rational c = 1;
        for (long i = 0; i < exponent; ++i) c *= t.coefficient;
        Term out{c, {}};
        for (const auto& f : t.factors) out.factors.push_back({f.atom, f.exponent * exponent});
        if (exponent == 0) out.factors.clear();
        return from_terms({std::move(out)});
    }
    CanonicalForm base = *this;
    long n = exponent;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

std::optional<CanonicalForm> CanonicalForm::reciprocal() const {
    if (terms_.size() != 1) return std::nullopt;
    const Term& t = terms_.front();
    Term out{1 / t.coefficient, {}};
    out.factors.reserve(t.factors.size());
    for (const auto& f : t.factors) out.factors.push_back({f.atom, -f.exponent});
    CanonicalForm form;
    form.terms_.push_back(std::move(out));
    return form;
}

CanonicalForm operator+(const CanonicalForm& lhs, const CanonicalForm& rhs) {
    if (lhs.is_zero()) return rhs;
    if (rhs.is_zero()) return lhs;
    CanonicalForm out;
    out.terms_.reserve(lhs.terms_.size() + rhs.terms_.size());
    auto a = lhs.terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != lhs.terms_.end() && b != rhs.terms_.end()) {
        int c = compare_factor_lists(a->factors, b->factors);
        if (c < 0) {
            out.terms_.push_back(*a++);
        } else if (c > 0) {
            out.terms_.push_back(*b++);
        } else {
            Rational sum = a->coefficient + b->coefficient;
            if (sum != 0) out.terms_.push_back({sum, a->factors});
            ++a;
            ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, lhs.terms_.end());
    out.terms_.insert(out.terms_.end(), b, rhs.terms_.end());
    return out;
}

CanonicalForm operator-(const CanonicalForm& lhs, const CanonicalForm& rhs) { return lhs + (-rhs); }

CanonicalForm operator*(const CanonicalForm& lhs, const CanonicalForm& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    TermMap map;
    for (const auto& a : lhs.terms_) {
        for (const auto& b : rhs.terms_) {
            map[multiply_factors(a.factors, b.factors)] += a.coefficient * b.coefficient;
        }
    }
    return from_map(std::move(map));
}

bool operator==(const CanonicalForm& lhs, const CanonicalForm& rhs) { return compare(lhs, rhs) == 0; }

int compare(const CanonicalForm& lhs, const CanonicalForm& rhs) {
    const std::size_t n = std::min(lhs.terms().size(), rhs.terms().size());
    for (std::size_t i = 0; i < n; ++i) {
        const Term& a = lhs.terms()[i];
        const Term& b = rhs.terms()[i];
        if (int c = compare_factor_lists(a.factors, b.factors); c != 0) return c;
        if (int c = cmp(a.coefficient, b.coefficient); c != 0) return c < 0 ? -1 : 1;
    }
    if (lhs.terms().size() == rhs.terms().size()) return 0;
    return lhs.terms().size() < rhs.terms().size() ? -1 : 1;
}

CanonicalForm term_form(const Term& term) { return CanonicalForm::from_terms({term}); }

CanonicalForm apply_function(Function fn, const CanonicalForm& argument) {
    if (auto value = argument.constant_value()) {
        if (*value == 0) {
            switch (fn) {
                case Function::Sin: return {};
                case Function::Cos:
                case Function::Exp: return CanonicalForm::constant(Rational(1));
                case Function::Ln: break;
            }
        }
        if (fn == Function::Ln) {
            if (*value <= 0) throw DomainError("ln of non-positive constant " + to_string(*value));
            if (*value == 1) return {};
        }
    }
    return CanonicalForm::atom(Atom::apply(fn, argument));
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_factor(std::ostringstream& out, const Factor& f) {
    if (f.atom.is_variable()) {
        out << f.atom.name();
    } else {
        out << f.atom.name() << '(' << render(f.atom.argument()) << ')';
    }
    if (f.exponent != 1) out << '^' << f.exponent;
}

// Renders |coefficient| * factors.
void render_magnitude(std::ostringstream& out, const Term& t) {
    Rational magnitude = abs(t.coefficient);
    const mpz_class& num = magnitude.get_num();
    const mpz_class& den = magnitude.get_den();
    if (t.factors.empty()) {
        out << magnitude.get_str();
        return;
    }
    bool first = true;
    if (num != 1) {
        out << num.get_str();
        first = false;
    }
    for (const auto& f : t.factors) {
        if (!first) out << '*';
        render_factor(out, f);
        first = false;
    }
    if (den != 1) out << '/' << den.get_str();
}

}  // namespace

std::string render(const Term& term) {
    std::ostringstream out;
    if (term.coefficient < 0) out << '-';
    render_magnitude(out, term);
    return out.str();
}

std::string render(const CanonicalForm& form) {
    if (form.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : form.terms()) {
        if (first) {
            if (t.coefficient < 0) out << '-';
        } else {
            out << (t.coefficient < 0 ? " - " : " + ");
        }
        render_magnitude(out, t);
        first = false;
    }
    return out.str();
}

}  // namespace vecinv
