#include "sfw/error.hpp"

namespace sfw {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::spec: return "spec";
    case ErrorKind::missing_prerequisite: return "missing_prerequisite";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::recovery: return "recovery";
    case ErrorKind::geometry: return "geometry";
    case ErrorKind::usage: return "usage";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::indefinite: return "indefinite";
    case ErrorKind::iteration: return "iteration";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace sfw
