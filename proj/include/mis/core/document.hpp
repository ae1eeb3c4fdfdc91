#pragma once

#include <nlohmann/json.hpp>

namespace mis {

// Canonical key→value tree carried by envelopes, config files and reports.
// nlohmann::json with the default std::map object type keeps keys sorted at
// every nesting level, and dump() emits no insignificant whitespace, so
// equal documents always serialize to byte-identical text.
using document = nlohmann::json;

// Compact canonical serialization of a document.
inline std::string canonical_dump(const document& doc) { return doc.dump(); }

}  // namespace mis
