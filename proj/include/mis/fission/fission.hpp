#pragma once

#include "mis/core/types.hpp"
#include "mis/knowledge/knowledge.hpp"

namespace mis {

struct fission_config {
  double epsilon_red{0.05};  // redundancy band below the best suitability

  void validate() const {
    if (epsilon_red < 0.0 || epsilon_red > 1.0)
      raise(errc::config_invalid, "epsilon_red in [0,1]");
  }
};

// Renders the act confirmation as "act(slot=value,...)" with slots in key
// order; canonical so reports are byte-comparable.
std::string render_content(const interpretation& interp);

// Primary act on the most suitable channel (ties by channel id), redundant
// copies on every other channel within epsilon of the best. Only channels
// with suitability > 0 participate. Throws NO_OUTPUT_CHANNEL.
output_plan plan(const interpretation& interp, const user_profile& profile,
                 const fission_config& cfg);

}  // namespace mis
