#include "mis/registry/registry.hpp"

namespace mis {

std::string service_registry::publish(service_descriptor d, std::int64_t ttl_ms,
                                      timestamp now) {
  validate_descriptor(d);
  if (ttl_ms <= 0) raise(errc::config_invalid, "ttl must be positive");
  std::lock_guard lock(mu_);
  for (const auto& [id, existing] : entries_) {
    if (id != d.service_id && existing.endpoint == d.endpoint &&
        live(existing, now))
      raise(errc::duplicate_endpoint, d.endpoint + " held by " + id);
  }
  d.lease_expiry = now + ttl_ms;
  entries_[d.service_id] = d;
  return d.service_id;
}

std::vector<service_descriptor> service_registry::find(const registry_query& q,
                                                       timestamp now) const {
  std::lock_guard lock(mu_);
  std::vector<service_descriptor> out;
  for (const auto& [id, d] : entries_) {
    if (!live(d, now)) continue;
    if (q.kind && d.kind != *q.kind) continue;
    if (q.modality && d.modality != *q.modality) continue;
    if (q.layer && d.layer != *q.layer) continue;
    out.push_back(d);
  }
  return out;  // entries_ is keyed by service_id, already sorted
}

std::vector<service_descriptor> service_registry::children(
    const std::string& parent, timestamp now) const {
  std::lock_guard lock(mu_);
  std::vector<service_descriptor> out;
  for (const auto& [id, d] : entries_)
    if (live(d, now) && d.parent_id == parent) out.push_back(d);
  return out;
}

bool service_registry::deregister(const std::string& service_id, timestamp) {
  std::lock_guard lock(mu_);
  return entries_.erase(service_id) > 0;
}

void service_registry::sweep(timestamp now) {
  std::lock_guard lock(mu_);
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (!live(it->second, now)) it = entries_.erase(it);
    else ++it;
  }
}

}  // namespace mis
