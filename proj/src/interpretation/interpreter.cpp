#include "mis/interpretation/interpreter.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace mis {

namespace {

void check_assignment(const std::vector<const modal_token*>& flat,
                      const std::vector<int>& assignment) {
  if (assignment.size() != flat.size())
    raise(errc::config_invalid, "assignment length mismatch");
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (assignment[i] < 0 ||
        assignment[i] >= static_cast<int>(flat[i]->alternatives.size()))
      raise(errc::config_invalid, "assignment index out of range");
  }
}

const modal_token* token_on_channel(const multimodal_terminal& term,
                                    const std::string& channel) {
  for (const auto& t : term.tokens)
    if (t.channel == channel) return &t;
  return nullptr;
}

// Best-first walk over the cartesian product of per-token alternative
// indices, ordered by confidence product descending, ties by index vector
// ascending.
class assignment_stream {
 public:
  explicit assignment_stream(const std::vector<const modal_token*>& flat)
      : flat_(flat) {
    push(std::vector<int>(flat.size(), 0));
  }

  std::optional<std::vector<int>> next() {
    if (heap_.empty()) return std::nullopt;
    entry top = heap_.top();
    heap_.pop();
    for (std::size_t i = 0; i < top.indices.size(); ++i) {
      if (top.indices[i] + 1 <
          static_cast<int>(flat_[i]->alternatives.size())) {
        auto child = top.indices;
        child[i] += 1;
        push(std::move(child));
      }
    }
    return top.indices;
  }

 private:
  struct entry {
    double product;
    std::vector<int> indices;

    bool operator<(const entry& other) const {  // max-heap on product
      if (product != other.product) return product < other.product;
      return indices > other.indices;  // prefer lexicographically smaller
    }
  };

  void push(std::vector<int> indices) {
    if (!seen_.insert(indices).second) return;
    double product = 1.0;
    for (std::size_t i = 0; i < indices.size(); ++i)
      product *= flat_[i]->alternatives[indices[i]].confidence;
    heap_.push({product, std::move(indices)});
  }

  const std::vector<const modal_token*>& flat_;
  std::priority_queue<entry> heap_;
  std::set<std::vector<int>> seen_;
};

}  // namespace

std::optional<std::map<std::string, std::string>> match_rule(
    const grammar_rule& rule, const multimodal_sentence& sentence,
    const std::vector<int>& assignment) {
  const auto flat = sentence.flatten();
  check_assignment(flat, assignment);
  if (rule.pattern.size() != sentence.terminals.size()) return std::nullopt;

  // flatten offset of the first token in each terminal
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  for (const auto& term : sentence.terminals) {
    offsets.push_back(offset);
    offset += term.tokens.size();
  }

  auto assigned = [&](const multimodal_terminal& term, std::size_t term_index,
                      const modal_token* tok) -> const token_alternative& {
    const std::size_t local = tok - term.tokens.data();
    return tok->alternatives[assignment[offsets[term_index] + local]];
  };

  std::map<std::string, std::string> slots;
  for (std::size_t p = 0; p < rule.pattern.size(); ++p) {
    const auto& term = sentence.terminals[p];
    for (const auto& [channel, symbol] : rule.pattern[p].requirements) {
      const modal_token* tok = token_on_channel(term, channel);
      if (!tok || assigned(term, p, tok).symbol != symbol) return std::nullopt;
    }
    for (const auto& cap : rule.pattern[p].captures) {
      const modal_token* tok = token_on_channel(term, cap.channel);
      if (!tok) return std::nullopt;
      const auto& payload = assigned(term, p, tok).payload;
      auto it = payload.find(cap.payload_key);
      if (it == payload.end()) return std::nullopt;
      slots[cap.slot] = it->second;
    }
  }
  return slots;
}

double score_candidate(const grammar_rule& rule,
                       const multimodal_sentence& sentence,
                       const std::vector<int>& assignment, const boosts& b) {
  const auto flat = sentence.flatten();
  check_assignment(flat, assignment);
  double score = rule.weight * b.get(rule.rule_id);
  for (std::size_t i = 0; i < flat.size(); ++i)
    score *= flat[i]->alternatives[assignment[i]].confidence;
  return score;
}

interpret_result interpret(const multimodal_sentence& sentence,
                           const grammar& g, const boosts& b) {
  const auto flat = sentence.flatten();

  std::vector<candidate> candidates;
  assignment_stream stream(flat);
  while (static_cast<int>(candidates.size()) < g.beam) {
    auto assignment = stream.next();
    if (!assignment) break;
    for (const auto& rule : g.rules) {
      auto slots = match_rule(rule, sentence, *assignment);
      if (!slots) continue;
      candidates.push_back({rule.rule_id, *assignment, std::move(*slots),
                            score_candidate(rule, sentence, *assignment, b)});
      if (static_cast<int>(candidates.size()) == g.beam) break;
    }
  }
  if (candidates.empty()) raise(errc::no_match);

  const auto better = [](const candidate& a, const candidate& c) {
    if (a.score != c.score) return a.score > c.score;
    if (a.rule_id != c.rule_id) return a.rule_id < c.rule_id;
    return a.assignment < c.assignment;
  };
  const candidate* winner = &candidates.front();
  for (const auto& c : candidates)
    if (better(c, *winner)) winner = &c;

  const double cutoff = g.theta * winner->score;
  std::vector<const candidate*> rivals;
  for (const auto& c : candidates)
    if (c.score >= cutoff) rivals.push_back(&c);

  ambiguity_report report;
  report.rival_count = static_cast<int>(rivals.size()) - 1;
  for (std::size_t i = 0; i < rivals.size(); ++i) {
    for (std::size_t j = i + 1; j < rivals.size(); ++j) {
      if (rivals[i]->assignment != rivals[j]->assignment)
        report.modal_propagated = true;
      else if (rivals[i]->rule_id != rivals[j]->rule_id)
        report.multimodal_conflict = true;
    }
  }

  const grammar_rule* rule = nullptr;
  for (const auto& r : g.rules)
    if (r.rule_id == winner->rule_id) rule = &r;

  interpret_result result;
  result.best.act = rule->act;
  result.best.slots = winner->slots;
  result.best.score = winner->score;
  result.best.rule_id = winner->rule_id;
  result.best.assignment = winner->assignment;
  result.ambiguity = report;
  return result;
}

}  // namespace mis
