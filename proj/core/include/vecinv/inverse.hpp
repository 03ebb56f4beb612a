#pragma once

#include <array>
#include <optional>

#include "vecinv/vecops.hpp"

namespace vecinv {

// Weights applied to the parts of h_j h_k B_i that do / do not contain u_i.
// The inverse curl only reproduces B for (1/3, 1/2); other values are
// accepted solely to study the formula.
struct InverseCurlWeights {
    Rational w_plus{1, 3};
    Rational w_minus{1, 2};
};

inline const InverseCurlWeights kInverseCurlWeights{};

// k1 + k2 + k3 = 1 exactly (ValidationError otherwise).
class DivergenceWeights {
public:
    DivergenceWeights();  // (1/3, 1/3, 1/3)
    DivergenceWeights(Rational k1, Rational k2, Rational k3);

    const Rational& operator[](std::size_t i) const { return k_.at(i); }

private:
    std::array<Rational, 3> k_;
};

// Start (a, b, c) of the integration path and the integration constant c0.
struct BasePoint {
    Rational a;
    Rational b;
    Rational c;
    Rational c0;

    static BasePoint defaults_for(const CoordinateSystem& system);
};

// Fluxes c_i = h_j h_k B_i for cyclic (i, j, k).
std::array<CanonicalForm, 3> flux_terms(const VectorField& b);

// d/du1 c1(u1+) + d/du2 c2(u2+) + d/du3 c3(u3+); vanishes for solenoidal B.
Expression plus_part_residual(const VectorField& b);

// Evaluates the inverse-curl determinant without any checks.
VectorField assemble_inverse_curl(const VectorField& b, const InverseCurlWeights& weights = kInverseCurlWeights);

// Throws NotSolenoidal (residual = divergence), NotIntegrable, or
// ConstructionFailed if curl(result) differs from b.
VectorField inverse_curl(const VectorField& b);

struct UncheckedInverseCurl {
    VectorField potential;
    Expression divergence_residual;
    // curl(potential) - b, componentwise.
    std::array<Expression, 3> curl_residual;
};

// Skips the solenoidality gate and the round-trip rejection; attaches both
// residuals instead.
UncheckedInverseCurl inverse_curl_unchecked(const VectorField& b);

VectorField inverse_divergence(const ScalarField& f, const DivergenceWeights& weights = {});

// Throws NotConservative (residual = curl), NotIntegrable or BasePointSingular.
ScalarField inverse_gradient(const VectorField& a, const BasePoint& base);
ScalarField inverse_gradient(const VectorField& a);  // default base point, c0 = 0

struct UncheckedInverseGradient {
    ScalarField potential;
    std::array<Expression, 3> curl_residual;
};

UncheckedInverseGradient inverse_gradient_unchecked(const VectorField& a, const BasePoint& base);

// A + grad(f); the curl is unchanged.
VectorField gauge_shift_curl(const VectorField& a, const ScalarField& f);
// A + curl(C); the divergence is unchanged.
VectorField gauge_shift_div(const VectorField& a, const VectorField& c);

}  // namespace vecinv
