#include "mis/core/error.hpp"

#include <array>
#include <utility>

namespace mis {

namespace {

constexpr std::array<std::pair<errc, std::string_view>, 23> kNames{{
    {errc::body_too_large, "BODY_TOO_LARGE"},
    {errc::malformed_frame, "MALFORMED_FRAME"},
    {errc::malformed_document, "MALFORMED_DOCUMENT"},
    {errc::missing_header_field, "MISSING_HEADER_FIELD"},
    {errc::duplicate_endpoint, "DUPLICATE_ENDPOINT"},
    {errc::empty_pool, "EMPTY_POOL"},
    {errc::unknown_instance, "UNKNOWN_INSTANCE"},
    {errc::underflow, "UNDERFLOW"},
    {errc::channel_mismatch, "CHANNEL_MISMATCH"},
    {errc::duplicate_rule_id, "DUPLICATE_RULE_ID"},
    {errc::empty_pattern, "EMPTY_PATTERN"},
    {errc::capture_channel_not_required, "CAPTURE_CHANNEL_NOT_REQUIRED"},
    {errc::bad_weight, "BAD_WEIGHT"},
    {errc::no_match, "NO_MATCH"},
    {errc::empty_term, "EMPTY_TERM"},
    {errc::not_range_restricted, "NOT_RANGE_RESTRICTED"},
    {errc::no_output_channel, "NO_OUTPUT_CHANNEL"},
    {errc::session_closed, "SESSION_CLOSED"},
    {errc::mesh_incomplete, "MESH_INCOMPLETE"},
    {errc::no_tokens, "NO_TOKENS"},
    {errc::scenario_parse, "SCENARIO_PARSE"},
    {errc::config_invalid, "CONFIG_INVALID"},
    {errc::transport, "TRANSPORT"},
}};

}  // namespace

std::string_view to_string(errc code) {
  for (const auto& [c, name] : kNames)
    if (c == code) return name;
  return "UNKNOWN";
}

errc errc_from_string(std::string_view name) {
  for (const auto& [c, n] : kNames)
    if (n == name) return c;
  return errc::transport;
}

}  // namespace mis
