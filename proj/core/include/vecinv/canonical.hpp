#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace vecinv {

// Exact arbitrary-precision rational; always kept in lowest terms.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
std::string to_string(const Rational& value);

enum class Function { Sin, Cos, Exp, Ln };

std::string_view function_name(Function fn) noexcept;
std::optional<Function> function_from_name(std::string_view name) noexcept;

class CanonicalForm;

// A multiplicative atom: a variable, or a function applied to a canonical
// argument.
class Atom {
public:
    static Atom variable(std::string name);
    static Atom apply(Function fn, CanonicalForm argument);

    bool is_variable() const noexcept { return !function_.has_value(); }
    // Variable name, or the function tag for applications.
    const std::string& name() const noexcept { return name_; }
    Function function() const { return *function_; }
    const CanonicalForm& argument() const { return *argument_; }

    bool depends_on(std::string_view var) const;

    friend bool operator==(const Atom& lhs, const Atom& rhs);
    friend std::strong_ordering operator<=>(const Atom& lhs, const Atom& rhs);

private:
    std::string name_;
    std::optional<Function> function_;
    std::shared_ptr<const CanonicalForm> argument_;
};

struct Factor {
    Atom atom;
    long exponent = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

using FactorList = std::vector<Factor>;

struct Term {
    Rational coefficient;
    FactorList factors;  // sorted by atom, atoms unique, exponents nonzero

    bool depends_on(std::string_view var) const;
    // Exponent of the variable `var` as a bare factor (0 if absent).
    long exponent_of(std::string_view var) const;
};

// Fixed total order on factor lists used for term ordering. Atoms ascend,
// higher powers of the same atom come first, and a list that runs out
// sorts after any list that continues (so constants are last).
int compare_factor_lists(const FactorList& lhs, const FactorList& rhs);

// Fully expanded sum of terms in deterministic order. The empty term list
// is zero.
class CanonicalForm {
public:
    CanonicalForm() = default;

    static CanonicalForm constant(const Rational& value);
    static CanonicalForm variable(std::string name);
    static CanonicalForm atom(Atom atom, long exponent = 1);
    // Merges like terms, drops zeros and sorts.
    static CanonicalForm from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::optional<Rational> constant_value() const;
    bool depends_on(std::string_view var) const;

    CanonicalForm operator-() const;
    CanonicalForm scaled(const Rational& factor) const;
    CanonicalForm pow(long exponent) const;
    // Defined only for single-term forms; nullopt otherwise (including zero).
    std::optional<CanonicalForm> reciprocal() const;

    friend CanonicalForm operator+(const CanonicalForm& lhs, const CanonicalForm& rhs);
    friend CanonicalForm operator-(const CanonicalForm& lhs, const CanonicalForm& rhs);
    friend CanonicalForm operator*(const CanonicalForm& lhs, const CanonicalForm& rhs);

    CanonicalForm& operator+=(const CanonicalForm& rhs) { return *this = *this + rhs; }
    CanonicalForm& operator-=(const CanonicalForm& rhs) { return *this = *this - rhs; }
    CanonicalForm& operator*=(const CanonicalForm& rhs) { return *this = *this * rhs; }

    friend bool operator==(const CanonicalForm& lhs, const CanonicalForm& rhs);

private:
    std::vector<Term> terms_;
};

int compare(const CanonicalForm& lhs, const CanonicalForm& rhs);

CanonicalForm term_form(const Term& term);

// f(argument) with exact folding of sin(0), cos(0), exp(0) and ln(1).
// Throws DomainError for ln of a non-positive constant.
CanonicalForm apply_function(Function fn, const CanonicalForm& argument);

// Deterministic text in the parser grammar.
std::string render(const CanonicalForm& form);
std::string render(const Term& term);

}  // namespace vecinv
