#pragma once

#include <stdexcept>
#include <string>

namespace picard {

enum class Errc {
  malformed_table,
  not_parallel,
  not_abelian,
  not_group,
  not_ring,
  not_module,
  domain_mismatch,
  parallelism,
  ring_mismatch,
  budget_exceeded,
  not_endring,
  boundary,
  not_closed,
  parse_error,
  version_unsupported,
  reference_error,
};

const char* errc_name(Errc c);

/// Error thrown by every operation whose contract names an error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace picard
