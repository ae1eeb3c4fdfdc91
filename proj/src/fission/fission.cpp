#include "mis/fission/fission.hpp"

namespace mis {

std::string render_content(const interpretation& interp) {
  std::string out = interp.act + "(";
  bool first = true;
  for (const auto& [slot, value] : interp.slots) {
    if (!first) out += ",";
    out += slot + "=" + value;
    first = false;
  }
  out += ")";
  return out;
}

output_plan plan(const interpretation& interp, const user_profile& profile,
                 const fission_config& cfg) {
  cfg.validate();

  // suitability map is sorted by channel id, so the first maximum wins ties
  std::string primary;
  double best = 0.0;
  for (const auto& [channel, s] : profile.suitability) {
    if (s > 0.0 && s > best) {
      best = s;
      primary = channel;
    }
  }
  if (primary.empty()) raise(errc::no_output_channel, profile.user_id);

  const std::string content = render_content(interp);
  output_plan result;
  result.acts.push_back({primary, content, false});
  for (const auto& [channel, s] : profile.suitability) {
    if (channel == primary || s <= 0.0) continue;
    if (s >= best - cfg.epsilon_red)
      result.acts.push_back({channel, content, true});
  }
  return result;
}

}  // namespace mis
