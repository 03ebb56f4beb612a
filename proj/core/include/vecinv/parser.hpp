#pragma once

#include <string>
#include <string_view>

#include "vecinv/expr.hpp"

namespace vecinv {

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-')* atom ('^' signed-integer)?
//   atom   := integer | identifier | function '(' expr ')' | '(' expr ')'
// '^' binds tighter than unary minus. Division is accepted only by a nonzero
// constant or a single term (Unsupported otherwise).
Expression parse(std::string_view text);

// Deterministic text for the canonical form of e; parse(render(e)) equals e.
std::string render(const Expression& e);

bool is_identifier(std::string_view text) noexcept;

}  // namespace vecinv
