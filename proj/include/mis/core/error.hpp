#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mis {

// Error codes named by the contract they enforce. Turn-level failures
// (MESH_INCOMPLETE, NO_TOKENS, NO_MATCH) are also used as TurnReport
// failure reasons and never escape the gateway.
enum class errc {
  body_too_large,
  malformed_frame,
  malformed_document,
  missing_header_field,
  duplicate_endpoint,
  empty_pool,
  unknown_instance,
  underflow,
  channel_mismatch,
  duplicate_rule_id,
  empty_pattern,
  capture_channel_not_required,
  bad_weight,
  no_match,
  empty_term,
  not_range_restricted,
  no_output_channel,
  session_closed,
  mesh_incomplete,
  no_tokens,
  scenario_parse,
  config_invalid,
  transport,
};

std::string_view to_string(errc code);
errc errc_from_string(std::string_view name);

class mis_error : public std::runtime_error {
 public:
  mis_error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}
  explicit mis_error(errc code) : mis_error(code, "") {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& detail = "") {
  throw mis_error(code, detail);
}

}  // namespace mis
