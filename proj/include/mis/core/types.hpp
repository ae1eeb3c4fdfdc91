#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mis/core/document.hpp"
#include "mis/core/error.hpp"
#include "mis/core/time.hpp"

namespace mis {

using payload_map = std::map<std::string, std::string>;

// Raw per-channel input as captured by a device.
struct modal_event {
  std::string session_id;
  std::string channel;
  payload_map payload;
  interval span;
  std::string device_id;
  bool end_turn{false};

  friend bool operator==(const modal_event&, const modal_event&) = default;
};

// One recognition hypothesis; tokens always carry their full n-best list
// with themselves at the head.
struct token_alternative {
  std::string symbol;
  payload_map payload;
  double confidence{0.0};

  friend bool operator==(const token_alternative&,
                         const token_alternative&) = default;
};

struct modal_token {
  std::string channel;
  std::string symbol;
  payload_map payload;
  interval span;
  double confidence{0.0};
  std::vector<token_alternative> alternatives;

  friend bool operator==(const modal_token&, const modal_token&) = default;
};

// Sorts alternatives by confidence descending, ties by symbol ascending,
// and aligns the token's own fields with the resulting head.
modal_token make_token(std::string channel, interval span,
                       std::vector<token_alternative> alternatives);

bool token_invariants_hold(const modal_token& t);

// Co-temporal tokens from distinct channels treated as one linguistic unit.
struct multimodal_terminal {
  std::vector<modal_token> tokens;  // sorted by channel, one per channel

  timestamp anchor() const;

  friend bool operator==(const multimodal_terminal&,
                         const multimodal_terminal&) = default;
};

struct multimodal_sentence {
  std::vector<multimodal_terminal> terminals;  // anchors non-decreasing

  // Tokens flattened in canonical order: terminals in order, tokens within
  // a terminal by channel. Assignment vectors index this flattening.
  std::vector<const modal_token*> flatten() const;

  friend bool operator==(const multimodal_sentence&,
                         const multimodal_sentence&) = default;
};

struct interpretation {
  std::string act;
  std::map<std::string, std::string> slots;
  double score{0.0};
  std::string rule_id;
  std::vector<int> assignment;  // chosen alternative index per token

  friend bool operator==(const interpretation&,
                         const interpretation&) = default;
};

struct ambiguity_report {
  bool modal_propagated{false};
  bool multimodal_conflict{false};
  int rival_count{0};

  friend bool operator==(const ambiguity_report&,
                         const ambiguity_report&) = default;
};

struct output_act {
  std::string channel;
  std::string content;
  bool redundant{false};

  friend bool operator==(const output_act&, const output_act&) = default;
};

struct output_plan {
  std::vector<output_act> acts;  // primary first, then redundant by channel

  friend bool operator==(const output_plan&, const output_plan&) = default;
};

enum class service_kind {
  gateway,
  broker,
  recognizer,
  fusion,
  interpreter,
  fission,
  knowledge,
};

enum class service_layer { saas, paas, iaas };

std::string_view to_string(service_kind k);
std::string_view to_string(service_layer l);
service_kind service_kind_from_string(std::string_view s);
service_layer service_layer_from_string(std::string_view s);

// The layer each kind lives at: gateway at SaaS, pipeline services at PaaS,
// knowledge at IaaS.
service_layer layer_for(service_kind k);

struct service_descriptor {
  std::string service_id;
  service_kind kind{service_kind::gateway};
  std::string modality;   // recognizers only, empty otherwise
  service_layer layer{service_layer::saas};
  std::string parent_id;  // empty for the gateway
  std::string endpoint;
  timestamp lease_expiry{};

  friend bool operator==(const service_descriptor&,
                         const service_descriptor&) = default;
};

// Throws config_invalid when the descriptor breaks its structural rules.
void validate_descriptor(const service_descriptor& d);

struct envelope_header {
  std::string message_id;
  std::string correlation_id;
  std::string session_id;
  std::string from_service;
  std::string to_service;
  std::string operation;

  friend bool operator==(const envelope_header&,
                         const envelope_header&) = default;
};

struct envelope {
  envelope_header header;
  document body = document::object();

  friend bool operator==(const envelope&, const envelope&) = default;
};

}  // namespace mis
