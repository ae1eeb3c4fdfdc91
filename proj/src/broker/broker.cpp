#include "mis/broker/broker.hpp"

#include <algorithm>

namespace mis {

std::string_view to_string(scale_event e) {
  switch (e) {
    case scale_event::grow: return "GROW";
    case scale_event::shrink: return "SHRINK";
    case scale_event::hold: return "HOLD";
  }
  return "HOLD";
}

instance_pool::instance_pool(std::string modality, int min_instances,
                             int max_instances)
    : modality_(std::move(modality)), min_(min_instances), max_(max_instances) {
  if (min_ < 1) raise(errc::config_invalid, "min_instances >= 1");
  if (max_ < min_) raise(errc::config_invalid, "max_instances >= min_instances");
  for (int i = 0; i < min_; ++i) instances_.push_back({fresh_id(), 0});
}

int instance_pool::total_depth() const {
  int total = 0;
  for (const auto& inst : instances_) total += inst.queue_depth;
  return total;
}

std::string instance_pool::assign() {
  if (instances_.empty()) raise(errc::empty_pool, modality_);
  auto best = instances_.begin();
  for (auto it = instances_.begin(); it != instances_.end(); ++it) {
    if (it->queue_depth < best->queue_depth ||
        (it->queue_depth == best->queue_depth &&
         it->instance_id < best->instance_id))
      best = it;
  }
  best->queue_depth += 1;
  return best->instance_id;
}

void instance_pool::complete(const std::string& instance_id) {
  auto it = std::find_if(instances_.begin(), instances_.end(),
                         [&](const pool_instance& i) {
                           return i.instance_id == instance_id;
                         });
  if (it == instances_.end()) raise(errc::unknown_instance, instance_id);
  if (it->queue_depth < 1) raise(errc::underflow, instance_id);
  it->queue_depth -= 1;
}

scale_event instance_pool::autoscale_tick(const scale_policy& policy) {
  const double avg =
      static_cast<double>(total_depth()) / static_cast<double>(instances_.size());
  if (avg > policy.q_hi) hi_streak_ += 1;
  else hi_streak_ = 0;

  if (hi_streak_ >= policy.window_w && size() < max_) {
    instances_.push_back({fresh_id(), 0});
    hi_streak_ = 0;
    return scale_event::grow;
  }

  if (avg < policy.q_lo && size() > min_) {
    // only an idle instance may go; pick the highest id among them
    auto victim = instances_.end();
    for (auto it = instances_.begin(); it != instances_.end(); ++it) {
      if (it->queue_depth != 0) continue;
      if (victim == instances_.end() || it->instance_id > victim->instance_id)
        victim = it;
    }
    if (victim != instances_.end()) {
      instances_.erase(victim);
      return scale_event::shrink;
    }
  }
  return scale_event::hold;
}

void broker::add_pool(const std::string& modality, int min_instances,
                      int max_instances) {
  std::lock_guard lock(mu_);
  if (pools_.contains(modality))
    raise(errc::config_invalid, "pool exists for " + modality);
  pools_.emplace(modality, instance_pool(modality, min_instances, max_instances));
}

bool broker::has_pool(const std::string& modality) const {
  std::lock_guard lock(mu_);
  return pools_.contains(modality);
}

instance_pool& broker::pool(const std::string& modality) {
  auto it = pools_.find(modality);
  if (it == pools_.end()) raise(errc::empty_pool, "no pool for " + modality);
  return it->second;
}

const instance_pool& broker::pool(const std::string& modality) const {
  auto it = pools_.find(modality);
  if (it == pools_.end()) raise(errc::empty_pool, "no pool for " + modality);
  return it->second;
}

std::string broker::assign(const std::string& modality) {
  std::lock_guard lock(mu_);
  return pool(modality).assign();
}

void broker::complete(const std::string& modality,
                      const std::string& instance_id) {
  std::lock_guard lock(mu_);
  pool(modality).complete(instance_id);
}

scale_event broker::tick(const std::string& modality) {
  std::lock_guard lock(mu_);
  return pool(modality).autoscale_tick(policy_);
}

document broker::snapshot() const {
  std::lock_guard lock(mu_);
  document pools = document::object();
  for (const auto& [modality, p] : pools_) {
    document instances = document::array();
    for (const auto& inst : p.instances())
      instances.push_back(document{{"instance_id", inst.instance_id},
                                   {"queue_depth", inst.queue_depth}});
    pools[modality] = document{{"hi_streak", p.hi_streak()},
                               {"instances", instances},
                               {"max_instances", p.max_instances()},
                               {"min_instances", p.min_instances()}};
  }
  return document{{"pools", pools}};
}

std::vector<std::string> broker::modalities() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& [modality, p] : pools_) out.push_back(modality);
  return out;
}

int broker::pool_size(const std::string& modality) const {
  std::lock_guard lock(mu_);
  return pool(modality).size();
}

}  // namespace mis
