#pragma once

#include "mis/core/types.hpp"

namespace mis {

// Document conversions for everything that travels in envelope bodies,
// config files or reports. from_doc functions validate shape and raise
// MALFORMED_DOCUMENT; domain invariants are re-established on decode.

document to_doc(const modal_event& e);
modal_event event_from_doc(const document& d);

document to_doc(const modal_token& t);
modal_token token_from_doc(const document& d);

document to_doc(const multimodal_sentence& s);
multimodal_sentence sentence_from_doc(const document& d);

document to_doc(const interpretation& i);
interpretation interpretation_from_doc(const document& d);

document to_doc(const ambiguity_report& r);
ambiguity_report ambiguity_from_doc(const document& d);

document to_doc(const output_plan& p);
output_plan plan_from_doc(const document& d);

document to_doc(const service_descriptor& d);
service_descriptor descriptor_from_doc(const document& d);

// Field access helpers shared by the parsers.
const document& require_field(const document& d, const char* name);
std::string require_string(const document& d, const char* name);
std::int64_t require_int(const document& d, const char* name);
double require_number(const document& d, const char* name);
bool optional_bool(const document& d, const char* name, bool fallback);
payload_map payload_from_doc(const document& d);
document payload_to_doc(const payload_map& p);

}  // namespace mis
