#include "editgym/log.hpp"

#include <cstdlib>
#include <string_view>

#include <spdlog/sinks/stdout_sinks.h>

namespace editgym {

spdlog::logger& logger() {
  static std::shared_ptr<spdlog::logger> instance = [] {
    auto l = spdlog::stderr_logger_mt("editgym");
    l->set_pattern("[%l] %v");
    std::string_view level = std::getenv("EDITGYM_LOG") ? std::getenv("EDITGYM_LOG") : "error";
    if (level == "debug")
      l->set_level(spdlog::level::debug);
    else if (level == "info")
      l->set_level(spdlog::level::info);
    else
      l->set_level(spdlog::level::err);
    return l;
  }();
  return *instance;
}

}  // namespace editgym
