#include "vecinv/inverse.hpp"

#include "vecinv/calculus.hpp"
#include "vecinv/errors.hpp"

namespace vecinv {

namespace {

std::vector<std::string> render_all(const canonical::Components& c) {
    return {render(c[0]), render(c[1]), render(c[2])};
}

bool all_zero(const canonical::Components& c) { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

std::array<Expression, 3> to_expressions(const canonical::Components& c) {
    return {to_expression(c[0]), to_expression(c[1]), to_expression(c[2])};
}

canonical::Components flux_terms(const canonical::Components& b, const CoordinateSystem& system) {
    canonical::Components c;
    for (std::size_t i = 0; i < 3; ++i) {
        c[i] = system.scale_factor((i + 1) % 3) * system.scale_factor((i + 2) % 3) * b[i];
    }
    return c;
}

canonical::Components assemble(const canonical::Components& b, const CoordinateSystem& system,
                               const InverseCurlWeights& w) {
    const canonical::Components c = flux_terms(b, system);
    canonical::Components a;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3;
        const std::size_t k = (i + 2) % 3;
        const std::string& uj = system.name(j);
        const std::string& uk = system.name(k);
        CanonicalForm bracket =
            canonical::weighted_split_integral(c[j], uj, uk, w.w_plus, w.w_minus) -
            canonical::weighted_split_integral(c[k], uk, uj, w.w_plus, w.w_minus);
        a[i] = system.inverse_scale_factor(i) * bracket;
    }
    return a;
}

canonical::Components difference(const canonical::Components& lhs, const canonical::Components& rhs) {
    return {lhs[0] - rhs[0], lhs[1] - rhs[1], lhs[2] - rhs[2]};
}

}  // namespace

DivergenceWeights::DivergenceWeights() : k_{Rational(1, 3), Rational(1, 3), Rational(1, 3)} {}

DivergenceWeights::DivergenceWeights(Rational k1, Rational k2, Rational k3)
    : k_{std::move(k1), std::move(k2), std::move(k3)} {
    for (auto& k : k_) k.canonicalize();
    if (k_[0] + k_[1] + k_[2] != 1) {
        throw ValidationError("divergence weights must sum to 1, got " +
                              to_string(Rational(k_[0] + k_[1] + k_[2])));
    }
}

BasePoint BasePoint::defaults_for(const CoordinateSystem& system) {
    const auto& p = system.default_base_point();
    return {p[0], p[1], p[2], Rational(0)};
}

std::array<CanonicalForm, 3> flux_terms(const VectorField& b) {
    return flux_terms(canonical::canonicalize(b), b.system);
}

Expression plus_part_residual(const VectorField& b) {
    const auto c = flux_terms(b);
    CanonicalForm sum;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string& u = b.system.name(i);
        sum += canonical::differentiate(canonical::split_by_variable(c[i], u).plus_part, u);
    }
    return to_expression(sum);
}

VectorField assemble_inverse_curl(const VectorField& b, const InverseCurlWeights& weights) {
    return canonical::to_field(assemble(canonical::canonicalize(b), b.system, weights), b.system);
}

VectorField inverse_curl(const VectorField& b) {
    const auto components = canonical::canonicalize(b);
    const CanonicalForm div = canonical::divergence(components, b.system);
    if (!div.is_zero()) {
        throw NotSolenoidal("field is not solenoidal; divergence = " + render(div), {render(div)});
    }
    const auto a = assemble(components, b.system, kInverseCurlWeights);
    const auto residual = difference(canonical::curl(a, b.system), components);
    if (!all_zero(residual)) {
        throw ConstructionFailed("curl of the constructed potential differs from the input field",
                                 render_all(residual));
    }
    return canonical::to_field(a, b.system);
}

UncheckedInverseCurl inverse_curl_unchecked(const VectorField& b) {
    const auto components = canonical::canonicalize(b);
    const CanonicalForm div = canonical::divergence(components, b.system);
    const auto a = assemble(components, b.system, kInverseCurlWeights);
    const auto residual = difference(canonical::curl(a, b.system), components);
    return {canonical::to_field(a, b.system), to_expression(div), to_expressions(residual)};
}

VectorField inverse_divergence(const ScalarField& f, const DivergenceWeights& weights) {
    const CoordinateSystem& system = f.system;
    const CanonicalForm value = canonicalize(f.value);
    const CanonicalForm density = system.scale_factor(0) * system.scale_factor(1) * system.scale_factor(2) * value;
    canonical::Components a;
    for (std::size_t i = 0; i < 3; ++i) {
        if (weights[i] == 0) continue;
        const std::size_t j = (i + 1) % 3;
        const std::size_t k = (i + 2) % 3;
        a[i] = (system.inverse_scale_factor(j) * system.inverse_scale_factor(k) *
                canonical::antidifferentiate(density, system.name(i)))
                   .scaled(weights[i]);
    }
    const CanonicalForm residual = canonical::divergence(a, system) - value;
    if (!residual.is_zero()) {
        throw ConstructionFailed("divergence of the constructed potential differs from the input",
                                 {render(residual)});
    }
    return canonical::to_field(a, system);
}

namespace {

CanonicalForm at(const CanonicalForm& form, const std::string& var, const Rational& value) {
    try {
        return substitute(form, var, CanonicalForm::constant(value));
    } catch (const DomainError& e) {
        throw BasePointSingular("substituting " + var + " = " + to_string(value) + " is undefined: " + e.what());
    }
}

// Integral from `lower` to var of `integrand` d(var).
CanonicalForm definite(const CanonicalForm& integrand, const std::string& var, const Rational& lower) {
    CanonicalForm antiderivative = canonical::antidifferentiate(integrand, var);
    return antiderivative - at(antiderivative, var, lower);
}

CanonicalForm path_integral(const canonical::Components& a, const CoordinateSystem& system, const BasePoint& base) {
    const std::string& u1 = system.name(0);
    const std::string& u2 = system.name(1);
    const std::string& u3 = system.name(2);
    const CanonicalForm line1 = a[0] * system.scale_factor(0);
    const CanonicalForm line2 = a[1] * system.scale_factor(1);
    const CanonicalForm line3 = a[2] * system.scale_factor(2);

    const CanonicalForm seg3 = definite(at(at(line3, u1, base.a), u2, base.b), u3, base.c);
    const CanonicalForm seg2 = definite(at(line2, u1, base.a), u2, base.b);
    const CanonicalForm seg1 = definite(line1, u1, base.a);
    return seg1 + seg2 + seg3 + CanonicalForm::constant(base.c0);
}

}  // namespace

ScalarField inverse_gradient(const VectorField& a, const BasePoint& base) {
    const auto components = canonical::canonicalize(a);
    const auto rot = canonical::curl(components, a.system);
    if (!all_zero(rot)) {
        throw NotConservative("field is not conservative; curl = (" + render(rot[0]) + ", " + render(rot[1]) +
                                  ", " + render(rot[2]) + ")",
                              render_all(rot));
    }
    const CanonicalForm phi = path_integral(components, a.system, base);
    const auto residual = difference(canonical::gradient(phi, a.system), components);
    if (!all_zero(residual)) {
        throw ConstructionFailed("gradient of the constructed potential differs from the input field",
                                 render_all(residual));
    }
    return {to_expression(phi), a.system};
}

ScalarField inverse_gradient(const VectorField& a) { return inverse_gradient(a, BasePoint::defaults_for(a.system)); }

UncheckedInverseGradient inverse_gradient_unchecked(const VectorField& a, const BasePoint& base) {
    const auto components = canonical::canonicalize(a);
    const auto rot = canonical::curl(components, a.system);
    const CanonicalForm phi = path_integral(components, a.system, base);
    return {{to_expression(phi), a.system}, to_expressions(rot)};
}

VectorField gauge_shift_curl(const VectorField& a, const ScalarField& f) {
    if (!(a.system == f.system)) throw ValidationError("gauge scalar lives in a different coordinate system");
    return a + gradient(f);
}

VectorField gauge_shift_div(const VectorField& a, const VectorField& c) { return a + curl(c); }

}  // namespace vecinv
