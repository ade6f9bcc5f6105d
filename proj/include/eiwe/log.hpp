#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace eiwe {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

// Level comes from EIWE_LOG={quiet|info|debug}; default quiet.  Messages go
// to stderr so stdout stays byte-deterministic.
inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("EIWE_LOG");
    if (env == nullptr) return LogLevel::quiet;
    std::string_view v(env);
    if (v == "debug") return LogLevel::debug;
    if (v == "info") return LogLevel::info;
    return LogLevel::quiet;
  }();
  return level;
}

inline void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::info) std::cerr << "[eiwe] " << msg << "\n";
}

inline void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::debug) std::cerr << "[eiwe] " << msg << "\n";
}

}  // namespace eiwe
