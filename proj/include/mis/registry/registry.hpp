#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "mis/core/types.hpp"

namespace mis {

struct registry_query {
  std::optional<service_kind> kind;
  std::optional<std::string> modality;
  std::optional<service_layer> layer;
};

// SOA service registry: providers publish leased descriptors, consumers
// find and bind. Expiry is lazy (checked at query time); sweep() exists for
// housekeeping and must never change observable behavior.
class service_registry {
 public:
  // Stores d with lease_expiry = now + ttl. Re-publishing a service_id
  // replaces and renews it. Throws DUPLICATE_ENDPOINT when another live
  // service holds the same endpoint.
  std::string publish(service_descriptor d, std::int64_t ttl_ms, timestamp now);

  // Unexpired descriptors matching every set query field, by service_id.
  std::vector<service_descriptor> find(const registry_query& q,
                                       timestamp now) const;

  // Live descriptors whose parent_id equals parent, by service_id.
  std::vector<service_descriptor> children(const std::string& parent,
                                           timestamp now) const;

  // Removes the descriptor if present; idempotent.
  bool deregister(const std::string& service_id, timestamp now);

  // Drops expired entries eagerly. Observable behavior is identical with or
  // without calling this.
  void sweep(timestamp now);

 private:
  bool live(const service_descriptor& d, timestamp now) const {
    return d.lease_expiry > now;
  }

  mutable std::mutex mu_;
  std::map<std::string, service_descriptor> entries_;
};

}  // namespace mis
