#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "balo/feature_mask.hpp"
#include "balo/rng.hpp"

namespace balo {

/// The eight binarization curves. S1-S3 and V1-V3 are the six curves under
/// study; S0 is the Kennedy-Eberhart sigmoid and V0 the |tanh| curve of the
/// two legacy binary variants.
enum class TransferFunctionId { S1, S2, S3, V1, V2, V3, S0, V0 };

enum class TransferFamily { kSShaped, kVShaped };

inline constexpr std::array<TransferFunctionId, 8> kAllTransferFunctions{
    TransferFunctionId::S1, TransferFunctionId::S2, TransferFunctionId::S3,
    TransferFunctionId::V1, TransferFunctionId::V2, TransferFunctionId::V3,
    TransferFunctionId::S0, TransferFunctionId::V0,
};

TransferFamily family_of(TransferFunctionId id);

std::string_view to_string(TransferFunctionId id);

/// Case-sensitive parse of "s1".."s3", "v1".."v3", "s0", "v0".
std::optional<TransferFunctionId> parse_transfer(std::string_view name);

/// Map a real-valued step to a probability in [0,1].
/// Throws std::invalid_argument on non-finite input.
double transfer_value(TransferFunctionId id, double x);

/// S-shaped position update: bit d becomes 1 iff rand_d < T(step_d), one
/// fresh uniform per dimension in index order.
FeatureMask binarize_s(std::span<const double> step, TransferFunctionId id,
                       RandomStream& rng);

/// V-shaped position update: bit d of `current` is complemented iff
/// rand_d < T(step_d), otherwise kept. A zero step is the identity map.
FeatureMask binarize_v(std::span<const double> step, const FeatureMask& current,
                       TransferFunctionId id, RandomStream& rng);

}  // namespace balo
