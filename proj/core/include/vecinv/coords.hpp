#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vecinv/expr.hpp"

namespace vecinv {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

using SamplingBox = std::array<Interval, 3>;
using Triple = std::array<Rational, 3>;

// Orthogonal curvilinear system: coordinate names u1,u2,u3 with scale
// factors h1,h2,h3. Cheap to copy; the definition is shared.
class CoordinateSystem {
public:
    const std::string& label() const noexcept { return data_->label; }
    const std::array<std::string, 3>& names() const noexcept { return data_->names; }
    const std::string& name(std::size_t i) const { return data_->names.at(i); }
    const std::array<Expression, 3>& scale_factors() const noexcept { return data_->scale_factors; }
    const CanonicalForm& scale_factor(std::size_t i) const { return data_->canonical_h.at(i); }
    // 1/h_i as a single term.
    const CanonicalForm& inverse_scale_factor(std::size_t i) const { return data_->inverse_h.at(i); }
    const Triple& default_base_point() const noexcept { return data_->base_point; }
    const SamplingBox& default_sampling_box() const noexcept { return data_->box; }

    bool is_coordinate(std::string_view name) const noexcept;

    friend bool operator==(const CoordinateSystem& lhs, const CoordinateSystem& rhs);

private:
    struct Data {
        std::string label;
        std::array<std::string, 3> names;
        std::array<Expression, 3> scale_factors;
        std::array<CanonicalForm, 3> canonical_h;
        std::array<CanonicalForm, 3> inverse_h;
        Triple base_point;
        SamplingBox box;
    };
    explicit CoordinateSystem(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    friend CoordinateSystem make_coordinate_system(std::string label, std::array<std::string, 3> names,
                                                   std::array<Expression, 3> scale_factors, Triple base_point,
                                                   SamplingBox box);

    std::shared_ptr<const Data> data_;
};

// cartesian (x,y,z; 1,1,1), cylindrical (rho,phi,z; 1,rho,1),
// spherical (r,theta,phi; 1,r,r*sin(theta)). Throws UnknownSystem.
CoordinateSystem builtin(std::string_view name);

// Throws ValidationError on duplicate or invalid names, a zero scale factor,
// a scale factor referencing foreign variables or one whose reciprocal is
// not a single term, or a base point / box touching h_i = 0.
CoordinateSystem custom(std::array<std::string, 3> names, std::array<Expression, 3> scale_factors,
                        Triple base_point, SamplingBox box);
// Overload parsing the scale factors; parse failures become ValidationError.
CoordinateSystem custom(std::array<std::string, 3> names, const std::array<std::string, 3>& scale_factors,
                        Triple base_point, SamplingBox box);

// Flat key/value file: lines `key = value`, '#' comments. Keys: names
// (three comma-separated identifiers), h1, h2, h3 (expressions), base
// (three comma-separated rationals), box (three comma-separated lo:hi).
CoordinateSystem parse_coordinate_config(std::string_view text);
CoordinateSystem load_coordinate_file(const std::string& path);

}  // namespace vecinv
