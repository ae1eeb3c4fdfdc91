#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "mis/core/codec.hpp"
#include "mis/core/types.hpp"

namespace mis {

// One hosted service: consumes a request envelope, returns a response body.
// Contract failures are thrown as mis_error and travel back as an "error"
// body, never as broken connections.
class service_endpoint {
 public:
  virtual ~service_endpoint() = default;
  virtual const std::string& service_id() const = 0;
  virtual document handle(const envelope& request) = 0;
};

// Request/response fabric. Every request is framed, encoded and decoded
// through the MIS-WP/1 codec even when dispatch stays in-process, so both
// transports exercise the identical canonical path.
class bus {
 public:
  virtual ~bus() = default;

  // Throws the remote error when the response body carries one.
  document request(const std::string& from, const service_descriptor& to,
                   const std::string& operation, document body,
                   const std::string& session_id = "");

 protected:
  // Transports move encoded request frames to the service and bring encoded
  // response frames back.
  virtual std::vector<std::uint8_t> exchange(
      const service_descriptor& to, const std::vector<std::uint8_t>& frame) = 0;

 private:
  std::string next_message_id() {
    return "m-" + std::to_string(counter_.fetch_add(1) + 1);
  }

  std::atomic<std::uint64_t> counter_{0};
};

// Builds the response envelope for a handled request; shared by transports.
envelope make_response(const envelope& request, document body);
envelope make_error_response(const envelope& request, errc code,
                             const std::string& detail);

// Runs a handler on a decoded request and encodes the response, converting
// thrown mis_errors into error bodies.
std::vector<std::uint8_t> serve_frame(service_endpoint& service,
                                      const std::vector<std::uint8_t>& frame);

// Direct dispatch by service id; the default transport in simulation mode.
class inproc_bus : public bus {
 public:
  void attach(std::shared_ptr<service_endpoint> service);

 protected:
  std::vector<std::uint8_t> exchange(
      const service_descriptor& to,
      const std::vector<std::uint8_t>& frame) override;

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<service_endpoint>> services_;
};

}  // namespace mis
