#include "picard/error.hpp"

namespace picard {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_table: return "MALFORMED_TABLE";
    case Errc::not_parallel: return "NOT_PARALLEL";
    case Errc::not_abelian: return "NOT_ABELIAN";
    case Errc::not_group: return "NOT_GROUP";
    case Errc::not_ring: return "NOT_RING";
    case Errc::not_module: return "NOT_MODULE";
    case Errc::domain_mismatch: return "DOMAIN_MISMATCH";
    case Errc::parallelism: return "PARALLELISM";
    case Errc::ring_mismatch: return "RING_MISMATCH";
    case Errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case Errc::not_endring: return "NOT_ENDRING";
    case Errc::boundary: return "BOUNDARY";
    case Errc::not_closed: return "NOT_CLOSED";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::version_unsupported: return "VERSION_UNSUPPORTED";
    case Errc::reference_error: return "REFERENCE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace picard
