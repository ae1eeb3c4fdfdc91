#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "mis/core/types.hpp"

namespace mis {

struct scale_policy {
  int q_hi{4};      // scale-up queue threshold per instance
  int q_lo{1};      // scale-down threshold
  int window_w{3};  // consecutive over-threshold ticks before GROW

  void validate() const {
    if (window_w < 1) raise(errc::config_invalid, "window_w >= 1");
    if (q_lo >= q_hi) raise(errc::config_invalid, "q_lo < q_hi");
  }
};

enum class scale_event { grow, shrink, hold };

std::string_view to_string(scale_event e);

struct pool_instance {
  std::string instance_id;
  int queue_depth{0};

  friend bool operator==(const pool_instance&, const pool_instance&) = default;
};

// One recognizer instance pool per modality. Fresh instance ids are
// "{modality}-{monotonic counter}" so runs replay identically.
class instance_pool {
 public:
  instance_pool(std::string modality, int min_instances, int max_instances);

  // Least-loaded instance (ties by lowest instance_id); bumps its depth.
  std::string assign();

  // Marks one unit of work done on the instance.
  void complete(const std::string& instance_id);

  // One autoscaling decision per the queue-depth policy. GROW appends a
  // fresh idle instance after window_w consecutive over-threshold ticks;
  // SHRINK removes the idle instance with the highest id; GROW wins when
  // both would apply.
  scale_event autoscale_tick(const scale_policy& policy);

  const std::string& modality() const { return modality_; }
  const std::vector<pool_instance>& instances() const { return instances_; }
  int size() const { return static_cast<int>(instances_.size()); }
  int min_instances() const { return min_; }
  int max_instances() const { return max_; }
  int hi_streak() const { return hi_streak_; }
  int total_depth() const;

 private:
  std::string fresh_id() { return modality_ + "-" + std::to_string(counter_++); }

  std::string modality_;
  int min_;
  int max_;
  int hi_streak_{0};
  long counter_{0};
  std::vector<pool_instance> instances_;
};

// The Brokerage Service: owns the per-modality pools and serializes all
// assign/complete/tick traffic.
class broker {
 public:
  explicit broker(scale_policy policy = {}) : policy_(policy) {
    policy_.validate();
  }

  void add_pool(const std::string& modality, int min_instances,
                int max_instances);
  bool has_pool(const std::string& modality) const;

  std::string assign(const std::string& modality);
  void complete(const std::string& modality, const std::string& instance_id);
  scale_event tick(const std::string& modality);

  // Sorted snapshot of every pool: sizes, depths, streaks.
  document snapshot() const;

  std::vector<std::string> modalities() const;
  int pool_size(const std::string& modality) const;
  const scale_policy& policy() const { return policy_; }

 private:
  instance_pool& pool(const std::string& modality);
  const instance_pool& pool(const std::string& modality) const;

  mutable std::mutex mu_;
  scale_policy policy_;
  std::map<std::string, instance_pool> pools_;
};

}  // namespace mis
