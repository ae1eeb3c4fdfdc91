#include "mis/fusion/fusion.hpp"

#include <algorithm>

namespace mis {

bool near(const interval& a, const interval& b, std::int64_t delta_ms) {
  if (a.start <= b.end && b.start <= a.end) return true;  // overlap
  const std::int64_t gap = a.end < b.start ? b.start.ms - a.end.ms
                                           : a.start.ms - b.end.ms;
  return gap <= delta_ms;
}

namespace {

bool token_order(const modal_token& a, const modal_token& b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  if (a.channel != b.channel) return a.channel < b.channel;
  if (a.span.end != b.span.end) return a.span.end < b.span.end;
  return a.symbol < b.symbol;
}

bool admits(const multimodal_terminal& term, const modal_token& t,
            std::int64_t delta_ms) {
  for (const auto& member : term.tokens) {
    if (member.channel == t.channel) return false;
    if (!near(member.span, t.span, delta_ms)) return false;
  }
  return true;
}

void insert_by_channel(multimodal_terminal& term, modal_token t) {
  auto pos = std::find_if(term.tokens.begin(), term.tokens.end(),
                          [&](const modal_token& m) {
                            return m.channel > t.channel;
                          });
  term.tokens.insert(pos, std::move(t));
}

}  // namespace

multimodal_sentence fuse(std::vector<modal_token> tokens,
                         const fusion_config& cfg) {
  cfg.validate();
  std::stable_sort(tokens.begin(), tokens.end(), token_order);

  multimodal_sentence sentence;
  for (auto& t : tokens) {
    if (!sentence.terminals.empty() &&
        admits(sentence.terminals.back(), t, cfg.delta_ms)) {
      insert_by_channel(sentence.terminals.back(), std::move(t));
    } else {
      multimodal_terminal term;
      term.tokens.push_back(std::move(t));
      sentence.terminals.push_back(std::move(term));
    }
  }
  return sentence;
}

}  // namespace mis
