#pragma once

#include <vector>

#include "mis/core/types.hpp"

namespace mis {

struct fusion_config {
  std::int64_t delta_ms{500};  // inclusive merge gap

  void validate() const {
    if (delta_ms < 0) raise(errc::config_invalid, "delta_ms >= 0");
  }
};

// True when the intervals overlap or the gap between them is <= delta_ms.
bool near(const interval& a, const interval& b, std::int64_t delta_ms);

// Groups tokens into time-ordered multimodal terminals: greedy left-to-right
// over tokens sorted by t_start (ties by channel); a token joins the current
// terminal iff its channel is unused there and it is near every member.
// Order-insensitive in the input list.
multimodal_sentence fuse(std::vector<modal_token> tokens,
                         const fusion_config& cfg);

}  // namespace mis
