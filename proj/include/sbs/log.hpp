#pragma once

#include <string>

namespace sbs::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Current threshold. Initialised once from the SBS_LOG_LEVEL environment
// variable (error|warn|info|debug, default warn); unknown values fall back
// to the default.
Level level();
void set_level(Level lvl);

// Parse a level name; returns false and leaves out untouched on failure.
bool parse_level(const std::string& name, Level& out);

void write(Level lvl, const std::string& message);

inline void error(const std::string& m) { write(Level::error, m); }
inline void warn(const std::string& m) { write(Level::warn, m); }
inline void info(const std::string& m) { write(Level::info, m); }
inline void debug(const std::string& m) { write(Level::debug, m); }

} // namespace sbs::log
