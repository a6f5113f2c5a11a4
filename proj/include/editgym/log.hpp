#pragma once

#include <spdlog/spdlog.h>

namespace editgym {

/// Stderr logger; level from EDITGYM_LOG (error|info|debug, default error).
spdlog::logger& logger();

}  // namespace editgym
