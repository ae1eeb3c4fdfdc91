#include "mis/core/codec.hpp"

namespace mis {

namespace {

constexpr const char* kHeaderFields[] = {"correlation_id", "from_service",
                                         "message_id",     "operation",
                                         "session_id",     "to_service"};

std::string pull_header_field(const document& header, const char* name) {
  auto it = header.find(name);
  if (it == header.end() || !it->is_string())
    raise(errc::missing_header_field, name);
  return it->get<std::string>();
}

}  // namespace

std::string canonical_payload(const envelope& e) {
  if (e.header.operation.empty())
    raise(errc::missing_header_field, "operation");
  document header{
      {"correlation_id", e.header.correlation_id},
      {"from_service", e.header.from_service},
      {"message_id", e.header.message_id},
      {"operation", e.header.operation},
      {"session_id", e.header.session_id},
      {"to_service", e.header.to_service},
  };
  if (canonical_dump(e.body).size() > max_body_bytes)
    raise(errc::body_too_large);
  document frame{{"body", e.body}, {"header", header}};
  return canonical_dump(frame);
}

std::vector<std::uint8_t> encode_envelope(const envelope& e) {
  const std::string payload = canonical_payload(e);
  std::vector<std::uint8_t> out;
  out.reserve(payload.size() + 4);
  const auto len = static_cast<std::uint32_t>(payload.size());
  out.push_back(static_cast<std::uint8_t>((len >> 24) & 0xff));
  out.push_back(static_cast<std::uint8_t>((len >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((len >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(len & 0xff));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

envelope decode_payload(std::string_view payload) {
  document frame = document::parse(payload, nullptr, false);
  if (frame.is_discarded()) raise(errc::malformed_document, "not parseable");
  if (!frame.is_object() || frame.size() != 2 || !frame.contains("header") ||
      !frame.contains("body"))
    raise(errc::malformed_document, "expected {body, header}");
  const document& header = frame["header"];
  if (!header.is_object()) raise(errc::malformed_document, "header not a map");
  for (const auto& [key, value] : header.items()) {
    (void)value;
    bool known = false;
    for (const char* f : kHeaderFields) known |= key == f;
    if (!known) raise(errc::malformed_document, "unknown header field " + key);
  }
  envelope e;
  e.header.correlation_id = pull_header_field(header, "correlation_id");
  e.header.from_service = pull_header_field(header, "from_service");
  e.header.message_id = pull_header_field(header, "message_id");
  e.header.operation = pull_header_field(header, "operation");
  e.header.session_id = pull_header_field(header, "session_id");
  e.header.to_service = pull_header_field(header, "to_service");
  if (e.header.operation.empty()) raise(errc::missing_header_field, "operation");
  e.body = frame["body"];
  return e;
}

envelope decode_envelope(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 4) raise(errc::malformed_frame, "short prefix");
  const std::uint32_t len = (static_cast<std::uint32_t>(bytes[0]) << 24) |
                            (static_cast<std::uint32_t>(bytes[1]) << 16) |
                            (static_cast<std::uint32_t>(bytes[2]) << 8) |
                            static_cast<std::uint32_t>(bytes[3]);
  if (bytes.size() != static_cast<std::size_t>(len) + 4)
    raise(errc::malformed_frame, "length prefix disagrees with payload");
  return decode_payload(std::string_view(
      reinterpret_cast<const char*>(bytes.data()) + 4, len));
}

}  // namespace mis
