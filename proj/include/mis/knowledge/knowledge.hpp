#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mis/core/types.hpp"
#include "mis/interpretation/interpreter.hpp"

namespace mis {

struct triple {
  std::string subject;
  std::string predicate;
  std::string object;

  friend auto operator<=>(const triple&, const triple&) = default;
};

using triple_store = std::set<triple>;

// Terms starting with '?' are variables.
inline bool is_variable(const std::string& term) {
  return !term.empty() && term.front() == '?';
}

struct triple_pattern {
  std::string subject;
  std::string predicate;
  std::string object;
};

struct horn_rule {
  std::string rule_id;
  std::vector<triple_pattern> if_patterns;
  std::vector<triple_pattern> then_templates;
};

using binding = std::map<std::string, std::string>;

// Set-union semantics; duplicates ignored. Throws EMPTY_TERM.
triple_store assert_facts(triple_store store, const std::vector<triple>& facts);

// All substitutions satisfying the pattern conjunction against the store.
std::vector<binding> query(const triple_store& store,
                           const std::vector<triple_pattern>& patterns);

// Least fixpoint of applying all rules; terminates because the Herbrand
// base over occurring constants is finite. Throws NOT_RANGE_RESTRICTED.
triple_store infer(const triple_store& store,
                   const std::vector<horn_rule>& rules);

// For every fact (user_id, boost_rule, R) in the store, R maps to 1.25.
boosts boosts_for(const triple_store& store, const std::string& user_id);

struct user_profile {
  std::string user_id;
  std::vector<triple> preferences;             // subject = user_id
  std::map<std::string, double> suitability;   // output channel -> [0,1]
};

std::vector<horn_rule> rules_from_doc(const document& d);
user_profile profile_from_doc(const document& d);
document to_doc(const user_profile& p);
document triples_to_doc(const triple_store& store);
std::vector<triple> triples_from_doc(const document& d);

}  // namespace mis
