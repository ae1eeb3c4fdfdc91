#include "mis/core/serde.hpp"

namespace mis {

const document& require_field(const document& d, const char* name) {
  if (!d.is_object() || !d.contains(name))
    raise(errc::malformed_document, std::string("missing field ") + name);
  return d[name];
}

std::string require_string(const document& d, const char* name) {
  const document& f = require_field(d, name);
  if (!f.is_string())
    raise(errc::malformed_document, std::string(name) + " must be a string");
  return f.get<std::string>();
}

std::int64_t require_int(const document& d, const char* name) {
  const document& f = require_field(d, name);
  if (!f.is_number_integer())
    raise(errc::malformed_document, std::string(name) + " must be an integer");
  return f.get<std::int64_t>();
}

double require_number(const document& d, const char* name) {
  const document& f = require_field(d, name);
  if (!f.is_number())
    raise(errc::malformed_document, std::string(name) + " must be a number");
  return f.get<double>();
}

bool optional_bool(const document& d, const char* name, bool fallback) {
  if (!d.is_object() || !d.contains(name)) return fallback;
  if (!d[name].is_boolean())
    raise(errc::malformed_document, std::string(name) + " must be a boolean");
  return d[name].get<bool>();
}

payload_map payload_from_doc(const document& d) {
  if (!d.is_object()) raise(errc::malformed_document, "payload must be a map");
  payload_map out;
  for (const auto& [key, value] : d.items()) {
    if (!value.is_string())
      raise(errc::malformed_document, "payload values must be strings");
    out[key] = value.get<std::string>();
  }
  return out;
}

document payload_to_doc(const payload_map& p) {
  document d = document::object();
  for (const auto& [key, value] : p) d[key] = value;
  return d;
}

document to_doc(const modal_event& e) {
  return document{{"channel", e.channel},
                  {"device_id", e.device_id},
                  {"end_turn", e.end_turn},
                  {"payload", payload_to_doc(e.payload)},
                  {"session_id", e.session_id},
                  {"t_end", e.span.end.ms},
                  {"t_start", e.span.start.ms}};
}

modal_event event_from_doc(const document& d) {
  modal_event e;
  e.channel = require_string(d, "channel");
  e.device_id = require_string(d, "device_id");
  e.end_turn = optional_bool(d, "end_turn", false);
  e.payload = payload_from_doc(require_field(d, "payload"));
  e.session_id = require_string(d, "session_id");
  e.span.start.ms = require_int(d, "t_start");
  e.span.end.ms = require_int(d, "t_end");
  if (e.channel.empty()) raise(errc::malformed_document, "channel empty");
  if (e.span.start.ms < 0 || !e.span.valid())
    raise(errc::malformed_document, "bad event interval");
  return e;
}

namespace {

document alternative_to_doc(const token_alternative& a) {
  return document{{"confidence", a.confidence},
                  {"payload", payload_to_doc(a.payload)},
                  {"symbol", a.symbol}};
}

token_alternative alternative_from_doc(const document& d) {
  token_alternative a;
  a.confidence = require_number(d, "confidence");
  a.payload = payload_from_doc(require_field(d, "payload"));
  a.symbol = require_string(d, "symbol");
  return a;
}

}  // namespace

document to_doc(const modal_token& t) {
  document alts = document::array();
  for (const auto& a : t.alternatives) alts.push_back(alternative_to_doc(a));
  return document{{"alternatives", alts},
                  {"channel", t.channel},
                  {"confidence", t.confidence},
                  {"payload", payload_to_doc(t.payload)},
                  {"symbol", t.symbol},
                  {"t_end", t.span.end.ms},
                  {"t_start", t.span.start.ms}};
}

modal_token token_from_doc(const document& d) {
  const document& alts = require_field(d, "alternatives");
  if (!alts.is_array() || alts.empty())
    raise(errc::malformed_document, "token needs alternatives");
  std::vector<token_alternative> alternatives;
  for (const auto& a : alts) alternatives.push_back(alternative_from_doc(a));
  interval span{{require_int(d, "t_start")}, {require_int(d, "t_end")}};
  if (!span.valid()) raise(errc::malformed_document, "bad token interval");
  return make_token(require_string(d, "channel"), span,
                    std::move(alternatives));
}

document to_doc(const multimodal_sentence& s) {
  document terms = document::array();
  for (const auto& term : s.terminals) {
    document toks = document::array();
    for (const auto& t : term.tokens) toks.push_back(to_doc(t));
    terms.push_back(document{{"anchor", term.anchor().ms}, {"tokens", toks}});
  }
  return document{{"terminals", terms}};
}

multimodal_sentence sentence_from_doc(const document& d) {
  const document& terms = require_field(d, "terminals");
  if (!terms.is_array()) raise(errc::malformed_document, "terminals");
  multimodal_sentence s;
  for (const auto& term : terms) {
    const document& toks = require_field(term, "tokens");
    if (!toks.is_array() || toks.empty())
      raise(errc::malformed_document, "terminal without tokens");
    multimodal_terminal mt;
    for (const auto& t : toks) mt.tokens.push_back(token_from_doc(t));
    s.terminals.push_back(std::move(mt));
  }
  return s;
}

document to_doc(const interpretation& i) {
  document slots = document::object();
  for (const auto& [k, v] : i.slots) slots[k] = v;
  document assignment = document::array();
  for (int idx : i.assignment) assignment.push_back(idx);
  return document{{"act", i.act},
                  {"assignment", assignment},
                  {"rule_id", i.rule_id},
                  {"score", i.score},
                  {"slots", slots}};
}

interpretation interpretation_from_doc(const document& d) {
  interpretation i;
  i.act = require_string(d, "act");
  i.rule_id = require_string(d, "rule_id");
  i.score = require_number(d, "score");
  for (const auto& [k, v] : require_field(d, "slots").items()) {
    if (!v.is_string()) raise(errc::malformed_document, "slot values");
    i.slots[k] = v.get<std::string>();
  }
  for (const auto& idx : require_field(d, "assignment")) {
    if (!idx.is_number_integer()) raise(errc::malformed_document, "assignment");
    i.assignment.push_back(idx.get<int>());
  }
  return i;
}

document to_doc(const ambiguity_report& r) {
  document flags = document::array();
  if (r.modal_propagated) flags.push_back("MODAL_PROPAGATED");
  if (r.multimodal_conflict) flags.push_back("MULTIMODAL_CONFLICT");
  return document{{"flags", flags}, {"rival_count", r.rival_count}};
}

ambiguity_report ambiguity_from_doc(const document& d) {
  ambiguity_report r;
  for (const auto& f : require_field(d, "flags")) {
    if (f == "MODAL_PROPAGATED") r.modal_propagated = true;
    else if (f == "MULTIMODAL_CONFLICT") r.multimodal_conflict = true;
    else raise(errc::malformed_document, "unknown ambiguity flag");
  }
  r.rival_count = static_cast<int>(require_int(d, "rival_count"));
  return r;
}

document to_doc(const output_plan& p) {
  document acts = document::array();
  for (const auto& a : p.acts)
    acts.push_back(document{{"channel", a.channel},
                            {"content", a.content},
                            {"redundant", a.redundant}});
  return document{{"acts", acts}};
}

output_plan plan_from_doc(const document& d) {
  output_plan p;
  for (const auto& a : require_field(d, "acts")) {
    output_act act;
    act.channel = require_string(a, "channel");
    act.content = require_string(a, "content");
    act.redundant = optional_bool(a, "redundant", false);
    p.acts.push_back(std::move(act));
  }
  return p;
}

document to_doc(const service_descriptor& d) {
  return document{{"endpoint", d.endpoint},
                  {"kind", std::string(to_string(d.kind))},
                  {"layer", std::string(to_string(d.layer))},
                  {"lease_expiry", d.lease_expiry.ms},
                  {"modality", d.modality},
                  {"parent_id", d.parent_id},
                  {"service_id", d.service_id}};
}

service_descriptor descriptor_from_doc(const document& d) {
  service_descriptor out;
  out.endpoint = require_string(d, "endpoint");
  out.kind = service_kind_from_string(require_string(d, "kind"));
  out.layer = service_layer_from_string(require_string(d, "layer"));
  out.lease_expiry.ms = require_int(d, "lease_expiry");
  out.modality = require_string(d, "modality");
  out.parent_id = require_string(d, "parent_id");
  out.service_id = require_string(d, "service_id");
  return out;
}

}  // namespace mis
