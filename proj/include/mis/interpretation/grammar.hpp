#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mis/core/types.hpp"

namespace mis {

struct capture_spec {
  std::string slot;
  std::string channel;
  std::string payload_key;
};

// Requirements on one multimodal terminal; extra tokens in the terminal are
// ignored. Every capture channel must also be required.
struct terminal_pattern {
  std::vector<std::pair<std::string, std::string>> requirements;  // (channel, symbol)
  std::vector<capture_spec> captures;
};

struct grammar_rule {
  std::string rule_id;
  std::string act;
  std::vector<terminal_pattern> pattern;
  double weight{1.0};  // in (0,1]
};

struct grammar {
  std::vector<grammar_rule> rules;
  double theta{0.8};  // relative ambiguity band
  int beam{64};       // max candidates
};

// Parses and validates a grammar document. Throws DUPLICATE_RULE_ID,
// EMPTY_PATTERN, CAPTURE_CHANNEL_NOT_REQUIRED, BAD_WEIGHT.
grammar load_grammar(const document& d);

document to_doc(const grammar& g);

}  // namespace mis
