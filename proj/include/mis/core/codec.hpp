#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mis/core/types.hpp"

namespace mis {

// MIS-WP/1 wire protocol: a frame is a 4-byte big-endian unsigned payload
// length followed by the canonical UTF-8 document, identical in-process and
// over TCP loopback.

inline constexpr std::size_t max_body_bytes = 16u * 1024u * 1024u;

// Canonical payload (header/body document) without the length prefix.
std::string canonical_payload(const envelope& e);

// Full frame. Throws BODY_TOO_LARGE when the serialized body exceeds 16 MiB.
std::vector<std::uint8_t> encode_envelope(const envelope& e);

// Inverse of encode_envelope on its image. Throws MALFORMED_FRAME when the
// length prefix disagrees with the payload length, MALFORMED_DOCUMENT when
// the payload is not a valid document of the expected shape, and
// MISSING_HEADER_FIELD when a header field is absent or operation is empty.
envelope decode_envelope(const std::vector<std::uint8_t>& bytes);

// Payload-level decode used by the transports, which strip the prefix while
// reading from the stream.
envelope decode_payload(std::string_view payload);

}  // namespace mis
