#include "vecinv/parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "vecinv/errors.hpp"

namespace vecinv {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse_all() {
        Expression e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("operator or end of input");
        return e;
    }

private:
    Expression expr() {
        std::vector<Expression> terms{term()};
        for (;;) {
            skip_ws();
            if (accept('+')) {
                terms.push_back(term());
            } else if (accept('-')) {
                terms.push_back(Expression::negate(term()));
            } else {
                break;
            }
        }
        return Expression::sum(std::move(terms));
    }

    Expression term() {
        std::vector<Expression> factors{factor()};
        for (;;) {
            skip_ws();
            if (accept('*')) {
                factors.push_back(factor());
            } else if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                Expression divisor = factor();
                factors.push_back(invert(divisor, at));
            } else {
                break;
            }
        }
        return fold_constants(std::move(factors));
    }

    // Literal fractions like 1/2 stay a single constant node.
    static Expression fold_constants(std::vector<Expression> factors) {
        if (factors.size() == 2 && factors[0].kind() == Expression::Kind::Constant &&
            factors[1].kind() == Expression::Kind::Constant) {
            return Expression(factors[0].value() * factors[1].value());
        }
        return Expression::product(std::move(factors));
    }

    Expression invert(const Expression& divisor, std::size_t at) {
        CanonicalForm form = canonicalize(divisor);
        if (form.is_zero()) throw SourceError(at, "nonzero divisor", "0");
        if (auto value = form.constant_value()) return Expression(1 / *value);
        if (!form.reciprocal()) {
            throw Unsupported("division by multi-term expression '" + render(form) + "' at offset " +
                              std::to_string(at));
        }
        return Expression::power(divisor, -1);
    }

    Expression factor() {
        skip_ws();
        std::size_t negations = 0;
        while (accept('-')) {
            ++negations;
            skip_ws();
        }
        Expression base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            long exponent = signed_integer();
            base = Expression::power(base, exponent);
            // Reject forms the canonical algebra cannot represent, e.g. (x+1)^-1.
            if (exponent < 0) (void)canonicalize(base);
        }
        for (std::size_t i = 0; i < negations; ++i) base = Expression::negate(base);
        return base;
    }

    long signed_integer() {
        bool negative = false;
        while (peek() == '-' || peek() == '+') {
            negative ^= (peek() == '-');
            ++pos_;
            skip_ws();
        }
        if (!is_digit(peek())) fail("integer exponent");
        const std::size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        long value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc() || value > 100000) {
            throw SourceError(start, "exponent of magnitude at most 100000",
                              "'" + std::string(text_.substr(start, pos_ - start)) + "'");
        }
        return negative ? -value : value;
    }

    Expression atom() {
        skip_ws();
        const char c = peek();
        if (is_digit(c)) {
            const std::size_t start = pos_;
            while (is_digit(peek())) ++pos_;
            mpz_class value(std::string(text_.substr(start, pos_ - start)), 10);
            return Expression(Rational(value));
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (is_ident_char(peek())) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (auto fn = function_from_name(name)) {
                skip_ws();
                expect('(');
                Expression argument = expr();
                skip_ws();
                expect(')');
                return Expression::apply(*fn, argument);
            }
            skip_ws();
            if (peek() == '(') {
                throw SourceError(start, "one of sin, cos, exp, ln before '('", "'" + name + "'");
            }
            return Expression::variable(std::move(name));
        }
        if (accept('(')) {
            Expression inner = expr();
            skip_ws();
            expect(')');
            return inner;
        }
        fail("number, identifier, function or '('");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() == c && pos_ < text_.size()) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw SourceError(pos_, expected, found);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Expression& e) { return render(canonicalize(e)); }

bool is_identifier(std::string_view text) noexcept {
    if (text.empty() || !is_ident_start(text.front())) return false;
    for (char c : text) {
        if (!is_ident_char(c)) return false;
    }
    return !function_from_name(text).has_value();
}

}  // namespace vecinv
