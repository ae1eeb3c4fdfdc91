#include "mis/interpretation/grammar.hpp"

#include <set>

#include "mis/core/serde.hpp"

namespace mis {

grammar load_grammar(const document& d) {
  grammar g;
  if (d.contains("theta")) g.theta = require_number(d, "theta");
  if (d.contains("beam")) g.beam = static_cast<int>(require_int(d, "beam"));
  if (g.theta <= 0.0 || g.theta > 1.0)
    raise(errc::config_invalid, "theta must be in (0,1]");
  if (g.beam < 1) raise(errc::config_invalid, "beam must be >= 1");

  std::set<std::string> seen;
  for (const auto& rd : require_field(d, "rules")) {
    grammar_rule rule;
    rule.rule_id = require_string(rd, "rule_id");
    rule.act = require_string(rd, "act");
    rule.weight = require_number(rd, "weight");
    if (rule.weight <= 0.0 || rule.weight > 1.0)
      raise(errc::bad_weight, rule.rule_id);
    if (!seen.insert(rule.rule_id).second)
      raise(errc::duplicate_rule_id, rule.rule_id);

    const document& pattern = require_field(rd, "pattern");
    if (!pattern.is_array() || pattern.empty())
      raise(errc::empty_pattern, rule.rule_id);
    for (const auto& pd : pattern) {
      terminal_pattern tp;
      std::set<std::string> required_channels;
      for (const auto& req : require_field(pd, "requirements")) {
        std::string channel = require_string(req, "channel");
        required_channels.insert(channel);
        tp.requirements.emplace_back(std::move(channel),
                                     require_string(req, "symbol"));
      }
      if (pd.contains("captures")) {
        for (const auto& cap : pd["captures"]) {
          capture_spec c;
          c.slot = require_string(cap, "slot");
          c.channel = require_string(cap, "channel");
          c.payload_key = require_string(cap, "payload_key");
          if (!required_channels.contains(c.channel))
            raise(errc::capture_channel_not_required,
                  rule.rule_id + "/" + c.slot);
          tp.captures.push_back(std::move(c));
        }
      }
      rule.pattern.push_back(std::move(tp));
    }
    g.rules.push_back(std::move(rule));
  }
  return g;
}

document to_doc(const grammar& g) {
  document rules = document::array();
  for (const auto& rule : g.rules) {
    document pattern = document::array();
    for (const auto& tp : rule.pattern) {
      document reqs = document::array();
      for (const auto& [channel, symbol] : tp.requirements)
        reqs.push_back(document{{"channel", channel}, {"symbol", symbol}});
      document caps = document::array();
      for (const auto& c : tp.captures)
        caps.push_back(document{{"channel", c.channel},
                                {"payload_key", c.payload_key},
                                {"slot", c.slot}});
      pattern.push_back(document{{"captures", caps}, {"requirements", reqs}});
    }
    rules.push_back(document{{"act", rule.act},
                             {"pattern", pattern},
                             {"rule_id", rule.rule_id},
                             {"weight", rule.weight}});
  }
  return document{{"beam", g.beam}, {"rules", rules}, {"theta", g.theta}};
}

}  // namespace mis
