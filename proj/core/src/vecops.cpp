#include "vecinv/vecops.hpp"

#include <algorithm>

#include "vecinv/calculus.hpp"
#include "vecinv/errors.hpp"

namespace vecinv {

namespace {

void check_variables(const Expression& e, const CoordinateSystem& system,
                     const std::vector<std::string>& symbolic_constants) {
    for (const auto& v : free_variables(e)) {
        if (system.is_coordinate(v)) continue;
        if (std::find(symbolic_constants.begin(), symbolic_constants.end(), v) != symbolic_constants.end()) continue;
        throw ValidationError("variable '" + v + "' is neither a coordinate of the " + system.label() +
                              " system nor a declared symbolic constant");
    }
}

void require_same_system(const VectorField& lhs, const VectorField& rhs) {
    if (!(lhs.system == rhs.system)) throw ValidationError("vector fields live in different coordinate systems");
}

}  // namespace

VectorField make_vector_field(std::array<Expression, 3> components, CoordinateSystem system,
                              const std::vector<std::string>& symbolic_constants) {
    for (const auto& c : components) check_variables(c, system, symbolic_constants);
    return {std::move(components), std::move(system)};
}

ScalarField make_scalar_field(Expression value, CoordinateSystem system,
                              const std::vector<std::string>& symbolic_constants) {
    check_variables(value, system, symbolic_constants);
    return {std::move(value), std::move(system)};
}

bool equals(const VectorField& lhs, const VectorField& rhs) {
    if (!(lhs.system == rhs.system)) return false;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!equals(lhs.components[i], rhs.components[i])) return false;
    }
    return true;
}

bool is_zero(const VectorField& field) {
    return std::all_of(field.components.begin(), field.components.end(),
                       [](const Expression& c) { return canonicalize(c).is_zero(); });
}

VectorField operator+(const VectorField& lhs, const VectorField& rhs) {
    require_same_system(lhs, rhs);
    auto a = canonical::canonicalize(lhs);
    auto b = canonical::canonicalize(rhs);
    for (std::size_t i = 0; i < 3; ++i) a[i] += b[i];
    return canonical::to_field(a, lhs.system);
}

VectorField operator-(const VectorField& lhs, const VectorField& rhs) {
    require_same_system(lhs, rhs);
    auto a = canonical::canonicalize(lhs);
    auto b = canonical::canonicalize(rhs);
    for (std::size_t i = 0; i < 3; ++i) a[i] -= b[i];
    return canonical::to_field(a, lhs.system);
}

VectorField gradient(const ScalarField& f) {
    return canonical::to_field(canonical::gradient(canonicalize(f.value), f.system), f.system);
}

Expression divergence(const VectorField& a) {
    return to_expression(canonical::divergence(canonical::canonicalize(a), a.system));
}

VectorField curl(const VectorField& a) {
    return canonical::to_field(canonical::curl(canonical::canonicalize(a), a.system), a.system);
}

namespace canonical {

Components canonicalize(const VectorField& field) {
    return {vecinv::canonicalize(field.components[0]), vecinv::canonicalize(field.components[1]),
            vecinv::canonicalize(field.components[2])};
}

VectorField to_field(const Components& components, const CoordinateSystem& system) {
    return {{to_expression(components[0]), to_expression(components[1]), to_expression(components[2])}, system};
}

Components gradient(const CanonicalForm& f, const CoordinateSystem& system) {
    Components out;
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = system.inverse_scale_factor(i) * differentiate(f, system.name(i));
    }
    return out;
}

CanonicalForm divergence(const Components& a, const CoordinateSystem& system) {
    const auto& h = [&](std::size_t i) -> const CanonicalForm& { return system.scale_factor(i); };
    CanonicalForm sum = differentiate(h(1) * h(2) * a[0], system.name(0)) +
                        differentiate(h(2) * h(0) * a[1], system.name(1)) +
                        differentiate(h(0) * h(1) * a[2], system.name(2));
    const CanonicalForm inverse_volume =
        system.inverse_scale_factor(0) * system.inverse_scale_factor(1) * system.inverse_scale_factor(2);
    return inverse_volume * sum;
}

Components curl(const Components& a, const CoordinateSystem& system) {
    Components out;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3;
        const std::size_t k = (i + 2) % 3;
        // e_i/(h_j h_k) [d_j(h_k A_k) - d_k(h_j A_j)]
        CanonicalForm bracket = differentiate(system.scale_factor(k) * a[k], system.name(j)) -
                                differentiate(system.scale_factor(j) * a[j], system.name(k));
        out[i] = system.inverse_scale_factor(j) * system.inverse_scale_factor(k) * bracket;
    }
    return out;
}

}  // namespace canonical

}  // namespace vecinv
