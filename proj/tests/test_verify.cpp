#include <doctest.h>

#include "vecinv/errors.hpp"
#include "vecinv/parser.hpp"
#include "vecinv/verify.hpp"

using namespace vecinv;

namespace {

VectorField field(const char* system, const char* e1, const char* e2, const char* e3) {
    return make_vector_field({parse(e1), parse(e2), parse(e3)}, builtin(system));
}

}  // namespace

TEST_CASE("solenoidal and conservative predicates") {
    CHECK(is_solenoidal(field("cartesian", "x*y*z + y^2", "x*z + y", "-z - y*z^2/2")));
    CHECK(!is_solenoidal(field("cartesian", "x", "y", "z")));
    CHECK(is_solenoidal(field("spherical", "r^-2", "0", "0")));
    CHECK(is_conservative(field("cartesian", "x", "y", "z")));
    CHECK(!is_conservative(field("cartesian", "-y", "x", "0")));
    CHECK(is_conservative(field("cylindrical", "0", "rho^-1", "0")));
}

TEST_CASE("round-trip reports") {
    VerificationReport r = roundtrip_report(RoundTripKind::InverseCurl, field("cartesian", "y", "z", "x"));
    CHECK(r.kind == RoundTripKind::InverseCurl);
    CHECK(r.symbolic_equal);
    CHECK(r.numeric_agreement);
    CHECK(r.sample_count == 100);
    CHECK(r.resampled == 0);
    CHECK(r.rng_seed == 42);
    CHECK(r.max_abs_error <= 1e-12);
    REQUIRE(r.residual.size() == 3);
    for (const auto& e : r.residual) CHECK(canonicalize(e).is_zero());
    CHECK(r.result.size() == 3);
    CHECK(to_string(r.kind) == "inv-curl");

    ReportOptions opts;
    opts.samples = 25;
    opts.weights = DivergenceWeights(Rational(0), Rational(1), Rational(0));
    VerificationReport d = roundtrip_report(RoundTripKind::InverseDivergence,
                                            make_scalar_field(parse("rho*z"), builtin("cylindrical")), opts);
    CHECK(d.symbolic_equal);
    CHECK(d.sample_count == 25);
    CHECK(d.residual.size() == 1);

    VerificationReport g =
        roundtrip_report(RoundTripKind::InverseGradient, field("spherical", "2*r*cos(theta)", "-r*sin(theta)", "0"));
    CHECK(g.symbolic_equal);
    CHECK(g.numeric_agreement);
}

TEST_CASE("reports are deterministic for a seed") {
    ReportOptions opts;
    opts.seed = 7;
    VectorField b = field("spherical", "2*cos(theta)", "-2*sin(theta)", "0");
    VerificationReport a = roundtrip_report(RoundTripKind::InverseCurl, b, opts);
    VerificationReport c = roundtrip_report(RoundTripKind::InverseCurl, b, opts);
    CHECK(a.max_abs_error == c.max_abs_error);
    CHECK(a.max_rel_error == c.max_rel_error);
    CHECK(a.rng_seed == 7);
}

TEST_CASE("domain errors at sample points are redrawn") {
    // ln(y) is undefined for half of the default box.
    ReportOptions opts;
    opts.weights = DivergenceWeights(Rational(1), Rational(0), Rational(0));
    VerificationReport r = roundtrip_report(RoundTripKind::InverseDivergence,
                                            make_scalar_field(parse("ln(y)"), builtin("cartesian")), opts);
    CHECK(r.symbolic_equal);
    CHECK(r.sample_count == 100);
    CHECK(r.resampled > 0);
    CHECK(r.numeric_agreement);
}

TEST_CASE("compare flags a numeric mismatch") {
    CoordinateSystem cart = builtin("cartesian");
    VerificationReport r = compare({parse("x + 1/1000000")}, {parse("x")}, cart, ReportOptions{});
    CHECK(!r.symbolic_equal);
    CHECK(!r.numeric_agreement);
    CHECK(r.max_abs_error == doctest::Approx(1e-6));
}

TEST_CASE("preconditions are enforced unless unchecked") {
    CHECK_THROWS_AS(roundtrip_report(RoundTripKind::InverseCurl, field("cartesian", "x", "0", "0")), NotSolenoidal);
    ReportOptions opts;
    opts.unchecked = true;
    VerificationReport r = roundtrip_report(RoundTripKind::InverseCurl, field("cartesian", "x", "0", "0"), opts);
    CHECK(!r.symbolic_equal);
}
