#pragma once

#include <string>

namespace hvac {

enum class LogLevel { kQuiet = 0, kInfo = 1, kDebug = 2 };

void set_log_level(LogLevel level);
LogLevel log_level();

// Timestamped line on stderr when `level` is enabled.
void log(LogLevel level, const std::string& message);
inline void log_info(const std::string& message) { log(LogLevel::kInfo, message); }
inline void log_debug(const std::string& message) { log(LogLevel::kDebug, message); }
void log_warning(const std::string& message);

}  // namespace hvac
