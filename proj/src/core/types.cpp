#include "mis/core/types.hpp"

#include <limits>

namespace mis {

namespace {

bool alternative_order(const token_alternative& a, const token_alternative& b) {
  if (a.confidence != b.confidence) return a.confidence > b.confidence;
  return a.symbol < b.symbol;
}

}  // namespace

modal_token make_token(std::string channel, interval span,
                       std::vector<token_alternative> alternatives) {
  if (channel.empty()) raise(errc::config_invalid, "token channel empty");
  if (alternatives.empty())
    raise(errc::config_invalid, "token needs at least one alternative");
  for (const auto& alt : alternatives) {
    if (alt.confidence < 0.0 || alt.confidence > 1.0)
      raise(errc::config_invalid, "confidence outside [0,1]");
  }
  std::stable_sort(alternatives.begin(), alternatives.end(), alternative_order);
  modal_token t;
  t.channel = std::move(channel);
  t.span = span;
  t.symbol = alternatives.front().symbol;
  t.payload = alternatives.front().payload;
  t.confidence = alternatives.front().confidence;
  t.alternatives = std::move(alternatives);
  return t;
}

bool token_invariants_hold(const modal_token& t) {
  if (t.channel.empty() || t.alternatives.empty()) return false;
  if (!t.span.valid()) return false;
  for (std::size_t i = 0; i < t.alternatives.size(); ++i) {
    const auto& alt = t.alternatives[i];
    if (alt.confidence < 0.0 || alt.confidence > 1.0) return false;
    if (i > 0 && alternative_order(alt, t.alternatives[i - 1])) return false;
  }
  return t.symbol == t.alternatives.front().symbol &&
         t.confidence == t.alternatives.front().confidence;
}

timestamp multimodal_terminal::anchor() const {
  timestamp a{std::numeric_limits<std::int64_t>::max()};
  for (const auto& t : tokens) a = std::min(a, t.span.start);
  return a;
}

std::vector<const modal_token*> multimodal_sentence::flatten() const {
  std::vector<const modal_token*> out;
  for (const auto& term : terminals)
    for (const auto& tok : term.tokens) out.push_back(&tok);
  return out;
}

std::string_view to_string(service_kind k) {
  switch (k) {
    case service_kind::gateway: return "GATEWAY";
    case service_kind::broker: return "BROKER";
    case service_kind::recognizer: return "RECOGNIZER";
    case service_kind::fusion: return "FUSION";
    case service_kind::interpreter: return "INTERPRETER";
    case service_kind::fission: return "FISSION";
    case service_kind::knowledge: return "KNOWLEDGE";
  }
  return "GATEWAY";
}

std::string_view to_string(service_layer l) {
  switch (l) {
    case service_layer::saas: return "SAAS";
    case service_layer::paas: return "PAAS";
    case service_layer::iaas: return "IAAS";
  }
  return "SAAS";
}

service_kind service_kind_from_string(std::string_view s) {
  if (s == "GATEWAY") return service_kind::gateway;
  if (s == "BROKER") return service_kind::broker;
  if (s == "RECOGNIZER") return service_kind::recognizer;
  if (s == "FUSION") return service_kind::fusion;
  if (s == "INTERPRETER") return service_kind::interpreter;
  if (s == "FISSION") return service_kind::fission;
  if (s == "KNOWLEDGE") return service_kind::knowledge;
  raise(errc::malformed_document, "unknown service kind '" + std::string(s) + "'");
}

service_layer service_layer_from_string(std::string_view s) {
  if (s == "SAAS") return service_layer::saas;
  if (s == "PAAS") return service_layer::paas;
  if (s == "IAAS") return service_layer::iaas;
  raise(errc::malformed_document, "unknown layer '" + std::string(s) + "'");
}

service_layer layer_for(service_kind k) {
  switch (k) {
    case service_kind::gateway: return service_layer::saas;
    case service_kind::knowledge: return service_layer::iaas;
    default: return service_layer::paas;
  }
}

void validate_descriptor(const service_descriptor& d) {
  if (d.service_id.empty()) raise(errc::config_invalid, "descriptor without id");
  if (d.endpoint.empty())
    raise(errc::config_invalid, "descriptor without endpoint");
  if (d.kind == service_kind::recognizer && d.modality.empty())
    raise(errc::config_invalid, "recognizer descriptor needs a modality");
  if (d.kind != service_kind::recognizer && !d.modality.empty())
    raise(errc::config_invalid, "only recognizers carry a modality");
  if (d.kind == service_kind::gateway) {
    if (!d.parent_id.empty())
      raise(errc::config_invalid, "gateway has no parent");
  } else if (d.parent_id.empty()) {
    raise(errc::config_invalid, "non-gateway service needs the gateway parent");
  }
  if (d.layer != layer_for(d.kind))
    raise(errc::config_invalid,
          "kind " + std::string(to_string(d.kind)) + " must live at layer " +
              std::string(to_string(layer_for(d.kind))));
}

}  // namespace mis
