#include "balo/transfer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace balo {

TransferFamily family_of(TransferFunctionId id) {
  switch (id) {
    case TransferFunctionId::S0:
    case TransferFunctionId::S1:
    case TransferFunctionId::S2:
    case TransferFunctionId::S3:
      return TransferFamily::kSShaped;
    case TransferFunctionId::V0:
    case TransferFunctionId::V1:
    case TransferFunctionId::V2:
    case TransferFunctionId::V3:
      return TransferFamily::kVShaped;
  }
  throw std::invalid_argument("family_of: unknown transfer function");
}

std::string_view to_string(TransferFunctionId id) {
  switch (id) {
    case TransferFunctionId::S1: return "s1";
    case TransferFunctionId::S2: return "s2";
    case TransferFunctionId::S3: return "s3";
    case TransferFunctionId::V1: return "v1";
    case TransferFunctionId::V2: return "v2";
    case TransferFunctionId::V3: return "v3";
    case TransferFunctionId::S0: return "s0";
    case TransferFunctionId::V0: return "v0";
  }
  throw std::invalid_argument("to_string: unknown transfer function");
}

std::optional<TransferFunctionId> parse_transfer(std::string_view name) {
  for (const auto id : kAllTransferFunctions) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

double transfer_value(TransferFunctionId id, double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("transfer_value: input must be finite");
  }
  constexpr double pi = std::numbers::pi;
  switch (id) {
    case TransferFunctionId::S1:
      return 1.0 / (1.0 + std::exp(-2.0 * x));
    case TransferFunctionId::S2:
      return 1.0 / (1.0 + std::exp(-x / 2.0));
    case TransferFunctionId::S3:
      return 1.0 / (1.0 + std::exp(-x / 3.0));
    case TransferFunctionId::S0:
      return 1.0 / (1.0 + std::exp(-x));
    case TransferFunctionId::V1:
      return std::abs(std::erf(0.5 * std::sqrt(pi) * x));
    case TransferFunctionId::V2:
      return std::abs(x / std::sqrt(1.0 + x * x));
    case TransferFunctionId::V3:
      return std::abs((2.0 / pi) * std::atan(0.5 * pi * x));
    case TransferFunctionId::V0:
      return std::abs(std::tanh(x));
  }
  throw std::invalid_argument("transfer_value: unknown transfer function");
}

FeatureMask binarize_s(std::span<const double> step, TransferFunctionId id,
                       RandomStream& rng) {
  if (family_of(id) != TransferFamily::kSShaped) {
    throw std::invalid_argument("binarize_s: requires an s-shaped transfer function");
  }
  FeatureMask out(step.size());
  for (std::size_t d = 0; d < step.size(); ++d) {
    out.set(d, rng.uniform01() < transfer_value(id, step[d]));
  }
  return out;
}

FeatureMask binarize_v(std::span<const double> step, const FeatureMask& current,
                       TransferFunctionId id, RandomStream& rng) {
  if (family_of(id) != TransferFamily::kVShaped) {
    throw std::invalid_argument("binarize_v: requires a v-shaped transfer function");
  }
  if (step.size() != current.size()) {
    throw std::invalid_argument("binarize_v: step and current position length mismatch");
  }
  FeatureMask out = current;
  for (std::size_t d = 0; d < step.size(); ++d) {
    if (rng.uniform01() < transfer_value(id, step[d])) out.flip(d);
  }
  return out;
}

}  // namespace balo
