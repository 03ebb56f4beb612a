#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "support/numeric_oracle.hpp"
#include "vecinv/errors.hpp"
#include "vecinv/parser.hpp"
#include "vecinv/vecops.hpp"

using namespace vecinv;
using testing::Vec3;

namespace {

VectorField field(const char* system, const char* e1, const char* e2, const char* e3) {
    return make_vector_field({parse(e1), parse(e2), parse(e3)}, builtin(system));
}

bool components_are(const VectorField& f, const char* e1, const char* e2, const char* e3) {
    return equals(f[0], parse(e1)) && equals(f[1], parse(e2)) && equals(f[2], parse(e3));
}

Point at(const CoordinateSystem& s, const Vec3& p) { return {{s.name(0), p[0]}, {s.name(1), p[1]}, {s.name(2), p[2]}}; }

const char* kWorkedA[3] = {"(z*y + z^2*y^2/4)/3 + (y*z/3 + x*z^2/4)", "-(z*x + y*x*z^2/2)/3 - (x*y*z^2/6 + y^2*z/2)",
                          "-(y*x/3 + x^2*z/4) + x*y^2*z/6 + y^3/6"};

}  // namespace

TEST_CASE("gradient examples") {
    CHECK(components_are(gradient(make_scalar_field(parse("x"), builtin("cartesian"))), "1", "0", "0"));
    CHECK(components_are(gradient(make_scalar_field(parse("7/3"), builtin("spherical"))), "0", "0", "0"));

    CoordinateSystem sph = builtin("spherical");
    VectorField g = gradient(make_scalar_field(parse("r^2"), sph));
    CHECK(components_are(g, "2*r", "0", "0"));
    // Oracle: finite differences with h = (1, r, r sin(theta)).
    auto oracle = testing::NumericSystem::spherical();
    const Vec3 p{1.3, 0.8, 2.1};
    Vec3 expected = oracle.gradient([](const Vec3& q) { return q[0] * q[0]; }, p);
    for (std::size_t i = 0; i < 3; ++i) CHECK(eval_numeric(g[i], at(sph, p)) == doctest::Approx(expected[i]));

    VectorField gt = gradient(make_scalar_field(parse("r*theta*phi"), sph));
    CHECK(components_are(gt, "theta*phi", "phi", "theta*sin(theta)^-1"));
}

TEST_CASE("divergence examples") {
    CHECK(canonicalize(divergence(field("cartesian", "x*y*z + y^2", "x*z + y", "-z - y*z^2/2"))).is_zero());
    CHECK(equals(divergence(field("cartesian", "x", "y", "z")), Expression(3)));

    VectorField radial = field("cylindrical", "rho", "0", "0");
    CHECK(equals(divergence(radial), Expression(2)));
    auto oracle = testing::NumericSystem::cylindrical();
    const Vec3 p{1.7, 0.4, -0.9};
    testing::VectorFn a{[](const Vec3& q) { return q[0]; }, [](const Vec3&) { return 0.0; },
                        [](const Vec3&) { return 0.0; }};
    CHECK(oracle.divergence(a, p) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("curl examples") {
    VectorField a = field("cartesian", kWorkedA[0], kWorkedA[1], kWorkedA[2]);
    VectorField b = curl(a);
    CHECK(components_are(b, "x*y*z + y^2", "x*z + y", "-z - y*z^2/2"));
    CHECK(equals(b[0], parse("x*y*z + y^2")));

    CHECK(is_zero(curl(gradient(make_scalar_field(parse("x*y*z"), builtin("cartesian"))))));

    VectorField rot = curl(field("cartesian", "-y", "x", "0"));
    CHECK(components_are(rot, "0", "0", "2"));
    auto oracle = testing::NumericSystem::cartesian();
    testing::VectorFn swirl{[](const Vec3& q) { return -q[1]; }, [](const Vec3& q) { return q[0]; },
                            [](const Vec3&) { return 0.0; }};
    Vec3 numeric = oracle.curl(swirl, {0.2, -0.5, 1.1});
    CHECK(numeric[2] == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(std::abs(numeric[0]) < 1e-8);
}

TEST_CASE("symbolic curvilinear operators agree with finite differences") {
    testing::Generator gen(77);
    const std::array<std::pair<const char*, testing::NumericSystem>, 3> systems{
        std::pair{"cartesian", testing::NumericSystem::cartesian()},
        std::pair{"cylindrical", testing::NumericSystem::cylindrical()},
        std::pair{"spherical", testing::NumericSystem::spherical()}};
    for (const auto& [name, oracle] : systems) {
        CoordinateSystem s = builtin(name);
        for (int i = 0; i < 10; ++i) {
            VectorField a = gen.polynomial_field(s, 3, 2);
            testing::VectorFn fn;
            for (std::size_t c = 0; c < 3; ++c) {
                fn[c] = [&s, e = a[c]](const Vec3& q) { return eval_numeric(e, at(s, q)); };
            }
            const Vec3 p{gen.real(0.6, 1.8), gen.real(0.3, 2.5), gen.real(0.3, 2.5)};
            VectorField rot = curl(a);
            Vec3 expected = oracle.curl(fn, p);
            for (std::size_t c = 0; c < 3; ++c) {
                CHECK(eval_numeric(rot[c], at(s, p)) == doctest::Approx(expected[c]).epsilon(1e-5).scale(10));
            }
            CHECK(eval_numeric(divergence(a), at(s, p)) ==
                  doctest::Approx(oracle.divergence(fn, p)).epsilon(1e-5).scale(10));
        }
    }
}

TEST_CASE("property: div curl = 0 and curl grad = 0") {
    testing::Generator gen(3);
    for (const char* name : {"cartesian", "cylindrical", "spherical"}) {
        CoordinateSystem s = builtin(name);
        for (int i = 0; i < 50; ++i) {
            CHECK(canonicalize(divergence(curl(gen.polynomial_field(s)))).is_zero());
            CHECK(is_zero(curl(gradient(ScalarField{gen.polynomial(s.names()), s}))));
        }
    }
}

TEST_CASE("fields only reference coordinates or declared constants") {
    CHECK_THROWS_AS(field("cylindrical", "x", "0", "0"), ValidationError);
    CHECK_NOTHROW(make_vector_field({parse("a*rho"), Expression(0), Expression(0)}, builtin("cylindrical"), {"a"}));
    CHECK_THROWS_AS(make_scalar_field(parse("q"), builtin("cartesian")), ValidationError);
    CHECK_THROWS_AS(field("cartesian", "x", "0", "0") + field("spherical", "r", "0", "0"), ValidationError);
}
