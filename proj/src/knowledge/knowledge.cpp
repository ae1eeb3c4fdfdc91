#include "mis/knowledge/knowledge.hpp"

#include "mis/core/serde.hpp"

namespace mis {

namespace {

void validate_triple(const triple& t) {
  if (t.subject.empty() || t.predicate.empty() || t.object.empty())
    raise(errc::empty_term,
          "(" + t.subject + "," + t.predicate + "," + t.object + ")");
}

// Extends the binding if term unifies with value; constants must be equal.
bool unify_term(const std::string& term, const std::string& value,
                binding& b) {
  if (!is_variable(term)) return term == value;
  auto it = b.find(term);
  if (it != b.end()) return it->second == value;
  b[term] = value;
  return true;
}

void match_patterns(const triple_store& store,
                    const std::vector<triple_pattern>& patterns,
                    std::size_t index, binding current,
                    std::vector<binding>& out) {
  if (index == patterns.size()) {
    out.push_back(std::move(current));
    return;
  }
  const auto& p = patterns[index];
  for (const auto& fact : store) {
    binding extended = current;
    if (unify_term(p.subject, fact.subject, extended) &&
        unify_term(p.predicate, fact.predicate, extended) &&
        unify_term(p.object, fact.object, extended))
      match_patterns(store, patterns, index + 1, std::move(extended), out);
  }
}

std::string substitute(const std::string& term, const binding& b) {
  if (!is_variable(term)) return term;
  return b.at(term);
}

void check_range_restricted(const horn_rule& rule) {
  std::set<std::string> bound;
  for (const auto& p : rule.if_patterns) {
    if (is_variable(p.subject)) bound.insert(p.subject);
    if (is_variable(p.predicate)) bound.insert(p.predicate);
    if (is_variable(p.object)) bound.insert(p.object);
  }
  for (const auto& t : rule.then_templates) {
    for (const auto& term : {t.subject, t.predicate, t.object})
      if (is_variable(term) && !bound.contains(term))
        raise(errc::not_range_restricted, rule.rule_id + "/" + term);
  }
}

triple_pattern pattern_from_doc(const document& d) {
  if (!d.is_array() || d.size() != 3)
    raise(errc::malformed_document, "triple pattern must be [s,p,o]");
  for (const auto& term : d)
    if (!term.is_string())
      raise(errc::malformed_document, "triple terms must be strings");
  return {d[0].get<std::string>(), d[1].get<std::string>(),
          d[2].get<std::string>()};
}

}  // namespace

triple_store assert_facts(triple_store store,
                          const std::vector<triple>& facts) {
  for (const auto& f : facts) {
    validate_triple(f);
    store.insert(f);
  }
  return store;
}

std::vector<binding> query(const triple_store& store,
                           const std::vector<triple_pattern>& patterns) {
  std::vector<binding> out;
  match_patterns(store, patterns, 0, {}, out);
  return out;
}

triple_store infer(const triple_store& store,
                   const std::vector<horn_rule>& rules) {
  for (const auto& rule : rules) check_range_restricted(rule);

  triple_store closure = store;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules) {
      for (const auto& b : query(closure, rule.if_patterns)) {
        for (const auto& t : rule.then_templates) {
          triple derived{substitute(t.subject, b), substitute(t.predicate, b),
                         substitute(t.object, b)};
          validate_triple(derived);
          if (closure.insert(derived).second) changed = true;
        }
      }
    }
  }
  return closure;
}

boosts boosts_for(const triple_store& store, const std::string& user_id) {
  boosts out;
  for (const auto& fact : store)
    if (fact.subject == user_id && fact.predicate == "boost_rule")
      out.by_rule[fact.object] = 1.25;
  return out;
}

std::vector<horn_rule> rules_from_doc(const document& d) {
  if (!d.is_array()) raise(errc::malformed_document, "rules must be a list");
  std::vector<horn_rule> out;
  for (const auto& rd : d) {
    horn_rule rule;
    rule.rule_id = require_string(rd, "rule_id");
    for (const auto& p : require_field(rd, "if"))
      rule.if_patterns.push_back(pattern_from_doc(p));
    for (const auto& t : require_field(rd, "then"))
      rule.then_templates.push_back(pattern_from_doc(t));
    check_range_restricted(rule);
    out.push_back(std::move(rule));
  }
  return out;
}

user_profile profile_from_doc(const document& d) {
  user_profile p;
  p.user_id = require_string(d, "user_id");
  const document& channels = require_field(d, "channels");
  if (!channels.is_object())
    raise(errc::malformed_document, "channels must be a map");
  for (const auto& [channel, value] : channels.items()) {
    if (!value.is_number())
      raise(errc::malformed_document, "suitability must be a number");
    double s = value.get<double>();
    if (s < 0.0 || s > 1.0)
      raise(errc::malformed_document, "suitability outside [0,1]");
    p.suitability[channel] = s;
  }
  if (d.contains("preferences")) {
    for (const auto& pd : d["preferences"]) {
      auto pattern = pattern_from_doc(pd);
      triple t{pattern.subject, pattern.predicate, pattern.object};
      if (t.subject != p.user_id)
        raise(errc::malformed_document,
              "preference subject must be the user: " + t.subject);
      validate_triple(t);
      p.preferences.push_back(std::move(t));
    }
  }
  return p;
}

document to_doc(const user_profile& p) {
  document channels = document::object();
  for (const auto& [channel, s] : p.suitability) channels[channel] = s;
  document prefs = document::array();
  for (const auto& t : p.preferences)
    prefs.push_back(document::array({t.subject, t.predicate, t.object}));
  return document{{"channels", channels},
                  {"preferences", prefs},
                  {"user_id", p.user_id}};
}

document triples_to_doc(const triple_store& store) {
  document out = document::array();
  for (const auto& t : store)
    out.push_back(document::array({t.subject, t.predicate, t.object}));
  return out;
}

std::vector<triple> triples_from_doc(const document& d) {
  if (!d.is_array()) raise(errc::malformed_document, "triples must be a list");
  std::vector<triple> out;
  for (const auto& td : d) {
    auto p = pattern_from_doc(td);
    out.push_back({p.subject, p.predicate, p.object});
  }
  return out;
}

}  // namespace mis
