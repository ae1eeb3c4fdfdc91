#include "mis/recognition/recognizer.hpp"

#include <algorithm>

#include "mis/core/serde.hpp"

namespace mis {

lexicon lexicon_from_doc(const document& d) {
  if (!d.is_array()) raise(errc::malformed_document, "lexicon must be a list");
  lexicon out;
  for (const auto& item : d) {
    lexicon_entry e;
    e.channel = require_string(item, "channel");
    e.match = payload_from_doc(require_field(item, "match"));
    e.symbol = require_string(item, "symbol");
    e.confidence = require_number(item, "confidence");
    if (e.confidence < 0.0 || e.confidence > 1.0)
      raise(errc::malformed_document, "confidence outside [0,1]");
    if (item.contains("alternatives")) {
      for (const auto& alt : item["alternatives"]) {
        double c = require_number(alt, "confidence");
        if (c < 0.0 || c > 1.0)
          raise(errc::malformed_document, "confidence outside [0,1]");
        e.alternatives.emplace_back(require_string(alt, "symbol"), c);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

document to_doc(const lexicon& lex) {
  document out = document::array();
  for (const auto& e : lex) {
    document alts = document::array();
    for (const auto& [sym, conf] : e.alternatives)
      alts.push_back(document{{"confidence", conf}, {"symbol", sym}});
    out.push_back(document{{"alternatives", alts},
                           {"channel", e.channel},
                           {"confidence", e.confidence},
                           {"match", payload_to_doc(e.match)},
                           {"symbol", e.symbol}});
  }
  return out;
}

namespace {

bool submap_of(const payload_map& pattern, const payload_map& payload) {
  for (const auto& [key, value] : pattern) {
    auto it = payload.find(key);
    if (it == payload.end() || it->second != value) return false;
  }
  return true;
}

}  // namespace

recognition_result recognize(const std::vector<modal_event>& events,
                             const lexicon& lex) {
  for (const auto& e : events)
    if (e.channel != events.front().channel)
      raise(errc::channel_mismatch,
            e.channel + " vs " + events.front().channel);

  recognition_result result;
  for (const auto& event : events) {
    const lexicon_entry* hit = nullptr;
    for (const auto& entry : lex) {
      if (entry.channel == event.channel && submap_of(entry.match, event.payload)) {
        hit = &entry;
        break;
      }
    }
    if (!hit) {
      result.unrecognized.push_back(event);
      continue;
    }
    std::vector<token_alternative> alts;
    alts.push_back({hit->symbol, event.payload, hit->confidence});
    for (const auto& [sym, conf] : hit->alternatives)
      alts.push_back({sym, event.payload, conf});
    result.tokens.push_back(
        make_token(event.channel, event.span, std::move(alts)));
  }
  std::stable_sort(result.tokens.begin(), result.tokens.end(),
                   [](const modal_token& a, const modal_token& b) {
                     if (a.span.start != b.span.start)
                       return a.span.start < b.span.start;
                     return a.symbol < b.symbol;
                   });
  return result;
}

}  // namespace mis
