#pragma once

#include <cassert>
#include <compare>
#include <cstdint>

#include "mis/core/error.hpp"

namespace mis {

// Milliseconds since scenario start. All timestamps in the deterministic
// path are virtual; nothing in the pipeline reads the wall clock.
struct timestamp {
  std::int64_t ms{0};

  friend auto operator<=>(const timestamp&, const timestamp&) = default;
};

inline timestamp operator+(timestamp t, std::int64_t dt) { return {t.ms + dt}; }

struct interval {
  timestamp start;
  timestamp end;

  bool valid() const { return start <= end; }

  friend auto operator<=>(const interval&, const interval&) = default;
};

// Owned by the harness; services see time only through envelope fields.
class virtual_clock {
 public:
  timestamp now() const { return now_; }

  void advance(std::int64_t dt_ms) {
    if (dt_ms < 0) raise(errc::config_invalid, "clock cannot move backwards");
    now_.ms += dt_ms;
  }

  // Jump forward to an absolute instant; never rewinds.
  void advance_to(timestamp t) {
    if (t > now_) now_ = t;
  }

 private:
  timestamp now_{};
};

}  // namespace mis
