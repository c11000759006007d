#pragma once

#include <cstdint>
#include <string_view>

namespace convdiff {

/// Size guards for the exhaustive procedures. Defaults are desk scale.
struct Limits {
  std::uint64_t max_group_order = 1024;
  /// Candidate generator-image assignments tried by homomorphism enumeration.
  std::uint64_t max_hom_candidates = 1'000'000;
  /// cod^dom bound for continuous map enumeration.
  std::uint64_t max_map_candidates = 10'000'000;
  std::uint64_t max_product_size = 1u << 20;
  /// |N(a)| * |D(X,Y)| bound for the differential oracle.
  std::uint64_t max_oracle_work = 1'000'000;
  /// log2 of the per-candidate work allowed for the literal filter sweep.
  unsigned max_filter_sweep_log2 = 22;
  unsigned max_hypercube_dim = 20;
};

/// Parses "key=value,key=value" overrides on top of `base`. Unknown keys and
/// malformed numbers throw InvalidArgument.
Limits parse_limits(std::string_view overrides, Limits base = {});

} // namespace convdiff
