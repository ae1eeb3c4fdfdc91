#pragma once

#include <string>
#include <vector>

#include "mis/core/types.hpp"

namespace mis {

// Table-driven stand-in for a modality recognition engine. First entry in
// file order whose channel matches and whose match pattern is a sub-map of
// the event payload wins.
struct lexicon_entry {
  std::string channel;
  payload_map match;
  std::string symbol;
  double confidence{0.0};
  std::vector<std::pair<std::string, double>> alternatives;
};

using lexicon = std::vector<lexicon_entry>;

// Parses a lexicon document (array of entries) and validates confidences.
lexicon lexicon_from_doc(const document& d);
document to_doc(const lexicon& lex);

struct recognition_result {
  std::vector<modal_token> tokens;        // by t_start, ties by symbol
  std::vector<modal_event> unrecognized;  // events with no matching entry
};

// Pure: one token per matched event, unmatched events reported on the side.
// Throws CHANNEL_MISMATCH when the events span channels.
recognition_result recognize(const std::vector<modal_event>& events,
                             const lexicon& lex);

}  // namespace mis
