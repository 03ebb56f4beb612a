#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vecinv/inverse.hpp"

namespace vecinv {

bool is_solenoidal(const VectorField& b);
bool is_conservative(const VectorField& a);

enum class RoundTripKind { InverseCurl, InverseDivergence, InverseGradient };

std::string_view to_string(RoundTripKind kind) noexcept;

// Numeric agreement: |forward - input| <= max(kRelativeTolerance * scale, kAbsoluteFloor)
// with scale = max(|forward|, |input|).
inline constexpr double kRelativeTolerance = 1e-9;
inline constexpr double kAbsoluteFloor = 1e-12;

struct ReportOptions {
    std::size_t samples = 100;
    std::uint64_t seed = 42;
    std::optional<SamplingBox> box;  // defaults to the system's sampling box
    DivergenceWeights weights;       // inverse divergence only
    std::optional<BasePoint> base;   // inverse gradient only; system default otherwise
    bool unchecked = false;          // skip the solenoidal / conservative gate
};

struct VerificationReport {
    RoundTripKind kind = RoundTripKind::InverseCurl;
    bool symbolic_equal = false;
    // forward(inverse(input)) - input, canonical; three components or one.
    std::vector<Expression> residual;
    std::size_t sample_count = 0;
    std::size_t resampled = 0;  // points redrawn after a DomainError
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;
    bool numeric_agreement = true;
    std::uint64_t rng_seed = 0;
    SamplingBox sampling_box{};
    std::vector<Expression> result;  // the potential that was verified
};

// Compares `forward` against `input` symbolically and at seeded random points.
// Both sides are evaluated independently from their own trees. A DomainError
// at a point redraws it; at most 10 * samples redraws are attempted.
VerificationReport compare(const std::vector<Expression>& forward, const std::vector<Expression>& input,
                           const CoordinateSystem& system, const ReportOptions& options);

// Runs the inverse operator, then the matching forward operator, and reports.
VerificationReport roundtrip_report(RoundTripKind kind, const VectorField& input, const ReportOptions& options = {});
VerificationReport roundtrip_report(RoundTripKind kind, const ScalarField& input, const ReportOptions& options = {});

}  // namespace vecinv
