#pragma once

#include <stdexcept>
#include <string>

namespace pb {

enum class Errc {
  invalid_argument,
  parse_error,
  degree_mismatch,
  inhomogeneous,
  unknown_variable,
  degenerate_geometry,
  unsupported_field,
  not_locally_free,
  precondition,
  no_witness,
  io_error,
  internal,
};

/// Exception carrying a machine-usable error class alongside the message.
class PbError : public std::runtime_error {
public:
  PbError(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw PbError(code, msg); }

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::internal, "internal invariant violated: " + msg);
}

}  // namespace pb
