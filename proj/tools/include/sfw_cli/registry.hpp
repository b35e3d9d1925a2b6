#pragma once

#include <string>

namespace sfw::cli {

/// The golden-suite configuration document (sfw-config/1).
const std::string& builtin_config();

}  // namespace sfw::cli
