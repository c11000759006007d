#include "convdiff/error.hpp"

#include <charconv>
#include <string>

#include "convdiff/limits.hpp"

namespace convdiff {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::MalformedTable: return "MalformedTable";
  case ErrorCode::NoIdentity: return "NoIdentity";
  case ErrorCode::NoInverse: return "NoInverse";
  case ErrorCode::NotAssociative: return "NotAssociative";
  case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
  case ErrorCode::NotGenerating: return "NotGenerating";
  case ErrorCode::Redundant: return "Redundant";
  case ErrorCode::NotReflexive: return "NotReflexive";
  case ErrorCode::EmptyFilter: return "EmptyFilter";
  case ErrorCode::NotContinuous: return "NotContinuous";
  case ErrorCode::NotCayley: return "NotCayley";
  case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  case ErrorCode::WindowTooSmall: return "WindowTooSmall";
  case ErrorCode::DimMismatch: return "DimMismatch";
  case ErrorCode::NotDifferentiable: return "NotDifferentiable";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
  }
  return "Unknown";
}

namespace {

std::uint64_t parse_u64(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorCode::InvalidArgument,
                "limit '" + std::string(key) + "' is not a number: " +
                    std::string(text));
  return value;
}

} // namespace

Limits parse_limits(std::string_view overrides, Limits base) {
  while (!overrides.empty()) {
    auto comma = overrides.find(',');
    auto item = overrides.substr(0, comma);
    overrides = comma == std::string_view::npos ? std::string_view{}
                                                : overrides.substr(comma + 1);
    if (item.empty())
      continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::InvalidArgument,
                  "limit override needs key=value: " + std::string(item));
    auto key = item.substr(0, eq);
    auto value = parse_u64(key, item.substr(eq + 1));
    if (key == "max_group_order")
      base.max_group_order = value;
    else if (key == "max_hom_candidates")
      base.max_hom_candidates = value;
    else if (key == "max_map_candidates")
      base.max_map_candidates = value;
    else if (key == "max_product_size")
      base.max_product_size = value;
    else if (key == "max_oracle_work")
      base.max_oracle_work = value;
    else if (key == "max_filter_sweep_log2")
      base.max_filter_sweep_log2 = static_cast<unsigned>(value);
    else if (key == "max_hypercube_dim")
      base.max_hypercube_dim = static_cast<unsigned>(value);
    else
      throw Error(ErrorCode::InvalidArgument,
                  "unknown limit: " + std::string(key));
  }
  return base;
}

} // namespace convdiff
