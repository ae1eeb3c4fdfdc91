#pragma once

#include "mis/interpretation/grammar.hpp"

namespace mis {

// Rule multipliers from the knowledge layer; unknown rules stay at 1.
struct boosts {
  std::map<std::string, double> by_rule;

  double get(const std::string& rule_id) const {
    auto it = by_rule.find(rule_id);
    return it == by_rule.end() ? 1.0 : it->second;
  }
};

struct candidate {
  std::string rule_id;
  std::vector<int> assignment;  // alternative index per flattened token
  std::map<std::string, std::string> slots;
  double score{0.0};
};

// Position-wise match of a whole-sentence rule under an n-best assignment.
// No-match is a value, not an error.
std::optional<std::map<std::string, std::string>> match_rule(
    const grammar_rule& rule, const multimodal_sentence& sentence,
    const std::vector<int>& assignment);

// weight(rule) x boost(rule) x product of every token's assigned confidence.
double score_candidate(const grammar_rule& rule,
                       const multimodal_sentence& sentence,
                       const std::vector<int>& assignment, const boosts& b);

struct interpret_result {
  interpretation best;
  ambiguity_report ambiguity;
};

// Enumerates matching (rule, assignment) candidates best-first by confidence
// product, truncated at grammar.beam; picks the top score (ties by rule_id,
// then assignment) and classifies the surviving rivals within the theta
// band. Throws NO_MATCH when nothing matches.
interpret_result interpret(const multimodal_sentence& sentence,
                           const grammar& g, const boosts& b);

}  // namespace mis
