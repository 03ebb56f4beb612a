#pragma once

#include <string_view>

#include "vecinv/expr.hpp"

namespace vecinv {

// Parts of an expression whose canonical terms do / do not contain a variable.
struct SplitPair {
    Expression plus_part;
    Expression minus_part;
};

bool contains_variable(const Expression& e, std::string_view var);
SplitPair split_by_variable(const Expression& e, std::string_view var);

Expression differentiate(const Expression& e, std::string_view var);

// Antiderivative with zero integration constant. A term is integrable when it
// contains `var` only as a monomial power (v^-1 integrates to ln v), or as a
// monomial v^n (n >= 0) times one sin/cos/exp factor whose argument is
// a*v + (terms free of v). Anything else throws NotIntegrable.
Expression antidifferentiate(const Expression& e, std::string_view var);

// w_plus * integral of the part containing split_var plus w_minus * integral
// of the remaining part, both with respect to int_var.
Expression weighted_split_integral(const Expression& e, std::string_view split_var,
                                   std::string_view int_var, const Rational& w_plus,
                                   const Rational& w_minus);

// Canonical-form versions used by the vector operators.
namespace canonical {

struct Split {
    CanonicalForm plus_part;
    CanonicalForm minus_part;
};

Split split_by_variable(const CanonicalForm& form, std::string_view var);
CanonicalForm differentiate(const CanonicalForm& form, std::string_view var);
CanonicalForm antidifferentiate(const CanonicalForm& form, std::string_view var);
CanonicalForm weighted_split_integral(const CanonicalForm& form, std::string_view split_var,
                                      std::string_view int_var, const Rational& w_plus,
                                      const Rational& w_minus);

}  // namespace canonical

}  // namespace vecinv
