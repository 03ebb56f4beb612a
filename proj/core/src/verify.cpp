#include "vecinv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "vecinv/errors.hpp"

namespace vecinv {

bool is_solenoidal(const VectorField& b) { return canonicalize(divergence(b)).is_zero(); }

bool is_conservative(const VectorField& a) { return is_zero(curl(a)); }

std::string_view to_string(RoundTripKind kind) noexcept {
    switch (kind) {
        case RoundTripKind::InverseCurl: return "inv-curl";
        case RoundTripKind::InverseDivergence: return "inv-div";
        case RoundTripKind::InverseGradient: return "inv-grad";
    }
    return "?";
}

VerificationReport compare(const std::vector<Expression>& forward, const std::vector<Expression>& input,
                           const CoordinateSystem& system, const ReportOptions& options) {
    if (forward.size() != input.size()) throw ValidationError("component count mismatch in comparison");
    VerificationReport report;
    report.rng_seed = options.seed;
    report.sampling_box = options.box.value_or(system.default_sampling_box());
    report.symbolic_equal = true;
    for (std::size_t i = 0; i < forward.size(); ++i) {
        CanonicalForm r = canonicalize(forward[i]) - canonicalize(input[i]);
        report.symbolic_equal = report.symbolic_equal && r.is_zero();
        report.residual.push_back(to_expression(r));
    }

    std::mt19937_64 rng(options.seed);
    std::array<std::uniform_real_distribution<double>, 3> draw;
    for (std::size_t i = 0; i < 3; ++i) {
        draw[i] = std::uniform_real_distribution<double>(report.sampling_box[i].lo, report.sampling_box[i].hi);
    }
    const std::size_t max_redraws = 10 * options.samples;
    Point point;
    while (report.sample_count < options.samples) {
        for (std::size_t i = 0; i < 3; ++i) point[system.name(i)] = draw[i](rng);
        double point_abs = 0.0;
        double point_rel = 0.0;
        bool point_ok = true;
        try {
            for (std::size_t i = 0; i < forward.size(); ++i) {
                const double lhs = eval_numeric(forward[i], point);
                const double rhs = eval_numeric(input[i], point);
                const double abs_error = std::abs(lhs - rhs);
                const double scale = std::max(std::abs(lhs), std::abs(rhs));
                point_abs = std::max(point_abs, abs_error);
                point_rel = std::max(point_rel, scale > 0.0 ? abs_error / scale : 0.0);
                point_ok = point_ok && abs_error <= std::max(kRelativeTolerance * scale, kAbsoluteFloor);
            }
        } catch (const DomainError&) {
            if (report.resampled++ >= max_redraws) break;
            continue;
        }
        report.max_abs_error = std::max(report.max_abs_error, point_abs);
        report.max_rel_error = std::max(report.max_rel_error, point_rel);
        report.numeric_agreement = report.numeric_agreement && point_ok;
        ++report.sample_count;
    }
    return report;
}

namespace {

std::vector<Expression> as_vector(const std::array<Expression, 3>& c) { return {c[0], c[1], c[2]}; }

}  // namespace

VerificationReport roundtrip_report(RoundTripKind kind, const VectorField& input, const ReportOptions& options) {
    VerificationReport report;
    std::vector<Expression> result;
    switch (kind) {
        case RoundTripKind::InverseCurl: {
            VectorField potential =
                options.unchecked ? inverse_curl_unchecked(input).potential : inverse_curl(input);
            report = compare(as_vector(curl(potential).components), as_vector(input.components), input.system,
                             options);
            result = as_vector(potential.components);
            break;
        }
        case RoundTripKind::InverseGradient: {
            const BasePoint base = options.base.value_or(BasePoint::defaults_for(input.system));
            ScalarField potential =
                options.unchecked ? inverse_gradient_unchecked(input, base).potential : inverse_gradient(input, base);
            report = compare(as_vector(gradient(potential).components), as_vector(input.components), input.system,
                             options);
            result = {potential.value};
            break;
        }
        case RoundTripKind::InverseDivergence:
            throw ValidationError("inverse divergence takes a scalar field");
    }
    report.kind = kind;
    report.result = std::move(result);
    return report;
}

VerificationReport roundtrip_report(RoundTripKind kind, const ScalarField& input, const ReportOptions& options) {
    if (kind != RoundTripKind::InverseDivergence) {
        throw ValidationError(std::string(to_string(kind)) + " takes a vector field");
    }
    VectorField potential = inverse_divergence(input, options.weights);
    VerificationReport report = compare({divergence(potential)}, {input.value}, input.system, options);
    report.kind = kind;
    report.result = as_vector(potential.components);
    return report;
}

}  // namespace vecinv
