#include <doctest.h>

#include "support/generators.hpp"
#include "vecinv/errors.hpp"
#include "vecinv/parser.hpp"

using namespace vecinv;

namespace {

const Expression x = Expression::variable("x");
const Expression y = Expression::variable("y");
const Expression z = Expression::variable("z");

std::size_t error_offset(std::string_view text) {
    try {
        (void)parse(text);
    } catch (const SourceError& e) {
        return e.offset();
    }
    FAIL("expected a SourceError for '" << text << "'");
    return 0;
}

}  // namespace

TEST_CASE("parse builds the expected tree") {
    Expression e = parse("x*y*z + y^2");
    REQUIRE(e.kind() == Expression::Kind::Sum);
    REQUIRE(e.children().size() == 2);
    const Expression& product = e.children()[0];
    REQUIRE(product.kind() == Expression::Kind::Product);
    CHECK(product.children().size() == 3);
    CHECK(product.children()[2].name() == "z");
    const Expression& square = e.children()[1];
    REQUIRE(square.kind() == Expression::Kind::Power);
    CHECK(square.exponent() == 2);
    CHECK(square.children()[0].name() == "y");
}

TEST_CASE("third component of the solenoidal example") {
    Expression e = parse("-z - y*z^2/2");
    CHECK(equals(e, -z - y * pow(z, 2) * Expression::constant(make_rational(1, 2))));
    CHECK(equals(e, parse("-z*(1 + y*z/2)")));
}

TEST_CASE("precedence and unary minus") {
    CHECK(equals(parse("-x^2"), -(x * x)));
    CHECK(equals(parse("--x"), x));
    CHECK(equals(parse("2^3"), Expression(8)));
    CHECK(equals(parse("x^-1*x"), Expression(1)));
    CHECK(equals(parse("x ^ - 2"), pow(x, -2)));
    CHECK(equals(parse("1/2 + 1/3"), Expression::constant(make_rational(5, 6))));
    CHECK(equals(parse("x - y - z"), x - y - z));
    CHECK(equals(parse("x/y"), x * pow(y, -1)));
    CHECK(equals(parse("1/(2*rho)"), Expression::constant(make_rational(1, 2)) * pow(Expression::variable("rho"), -1)));
    CHECK(equals(parse("sin(theta)^2"), pow(sin(Expression::variable("theta")), 2)));
    CHECK(equals(parse("  exp ( x )  "), exp(x)));
    CHECK(parse("u_1").name() == "u_1");
}

TEST_CASE("malformed input carries a position") {
    CHECK(error_offset("x +") == 3);
    CHECK(error_offset("") == 0);
    CHECK(error_offset("x y") == 2);         // no implicit multiplication
    CHECK(error_offset("2x") == 1);
    CHECK(error_offset("sin x") == 4);
    CHECK(error_offset("sqrt(x)") == 0);
    CHECK(error_offset("(x + y") == 6);
    CHECK(error_offset("x^y") == 2);
    CHECK(error_offset("x^1.5") == 3);
    CHECK(error_offset("x / 0") == 4);
    CHECK(error_offset("x/(y - y)") == 2);
    CHECK(error_offset("x # 1") == 2);

    try {
        (void)parse("x +");
    } catch (const SourceError& e) {
        CHECK(e.found() == "end of input");
        CHECK(e.expected().find("identifier") != std::string::npos);
        CHECK(e.kind() == ErrorKind::Source);
    }
}

TEST_CASE("division by a multi-term expression is unsupported") {
    CHECK_THROWS_AS(parse("x/(x+1)"), Unsupported);
    CHECK_THROWS_AS(parse("(x+1)^-1"), Unsupported);
}

TEST_CASE("render formatting rules") {
    CHECK(render(parse("(x+1)*(x-1)")) == "x^2 - 1");
    CHECK(render(Expression(0)) == "0");
    CHECK(render(parse("x*y*z + y^2")) == "x*y*z + y^2");
    CHECK(render(parse("-z - y*z^2/2")) == "-y*z^2/2 - z");
    CHECK(render(parse("3*x/4 - 1/2")) == "3*x/4 - 1/2");
    CHECK(render(parse("2*cos(2*x)")) == "2*cos(2*x)");
    CHECK(render(parse("x^-1")) == "x^-1");
}

TEST_CASE("render of the example potential reparses") {
    Expression a1 = parse("(z*y + z^2*y^2/4)/3 + (y*z/3 + x*z^2/4)");
    CHECK(equals(parse(render(a1)), a1));
    CHECK(render(a1) == "x*z^2/4 + y^2*z^2/12 + 2*y*z/3");
}

TEST_CASE("property: parse(render(e)) == e for 500 random expressions") {
    testing::Generator gen(99);
    for (int i = 0; i < 500; ++i) {
        Expression e = gen.expression(4);
        const std::string text = render(e);
        CAPTURE(text);
        CHECK(equals(parse(text), e));
        CHECK(render(parse(text)) == text);
    }
}

TEST_CASE("property: rendering is injective on canonical forms") {
    testing::Generator gen(5);
    std::map<std::string, CanonicalForm> seen;
    for (int i = 0; i < 500; ++i) {
        CanonicalForm c = canonicalize(gen.expression(3));
        auto [it, inserted] = seen.emplace(render(c), c);
        if (!inserted) CHECK(it->second == c);
    }
}
