#pragma once

#include <array>
#include <string>
#include <vector>

#include "vecinv/coords.hpp"
#include "vecinv/expr.hpp"

namespace vecinv {

// Components along e1, e2, e3 of `system`.
struct VectorField {
    std::array<Expression, 3> components;
    CoordinateSystem system;

    const Expression& operator[](std::size_t i) const { return components.at(i); }
};

struct ScalarField {
    Expression value;
    CoordinateSystem system;
};

// Validating constructors: components may reference only the coordinate
// names and the listed symbolic constants (ValidationError otherwise).
VectorField make_vector_field(std::array<Expression, 3> components, CoordinateSystem system,
                              const std::vector<std::string>& symbolic_constants = {});
ScalarField make_scalar_field(Expression value, CoordinateSystem system,
                              const std::vector<std::string>& symbolic_constants = {});

// Componentwise canonical equality (same system required).
bool equals(const VectorField& lhs, const VectorField& rhs);
bool is_zero(const VectorField& field);
VectorField operator+(const VectorField& lhs, const VectorField& rhs);
VectorField operator-(const VectorField& lhs, const VectorField& rhs);

VectorField gradient(const ScalarField& f);
Expression divergence(const VectorField& a);
VectorField curl(const VectorField& a);

// Canonical-form kernels shared with the inverse operators.
namespace canonical {

using Components = std::array<CanonicalForm, 3>;

Components canonicalize(const VectorField& field);
VectorField to_field(const Components& components, const CoordinateSystem& system);

Components gradient(const CanonicalForm& f, const CoordinateSystem& system);
CanonicalForm divergence(const Components& a, const CoordinateSystem& system);
Components curl(const Components& a, const CoordinateSystem& system);

}  // namespace canonical

}  // namespace vecinv
