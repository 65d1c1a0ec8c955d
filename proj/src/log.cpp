#include "sbs/log.hpp"

#include <cstdio>
#include <cstdlib>

namespace sbs::log {

namespace {

Level g_level = [] {
    Level lvl = Level::warn;
    if (const char* env = std::getenv("SBS_LOG_LEVEL")) {
        parse_level(env, lvl);
    }
    return lvl;
}();

const char* tag(Level lvl) {
    switch (lvl) {
        case Level::error: return "error";
        case Level::warn: return "warn";
        case Level::info: return "info";
        case Level::debug: return "debug";
    }
    return "?";
}

} // namespace

Level level() { return g_level; }

void set_level(Level lvl) { g_level = lvl; }

bool parse_level(const std::string& name, Level& out) {
    if (name == "error") { out = Level::error; return true; }
    if (name == "warn") { out = Level::warn; return true; }
    if (name == "info") { out = Level::info; return true; }
    if (name == "debug") { out = Level::debug; return true; }
    return false;
}

void write(Level lvl, const std::string& message) {
    if (static_cast<int>(lvl) > static_cast<int>(g_level)) return;
    std::fprintf(stderr, "[%s] %s\n", tag(lvl), message.c_str());
}

} // namespace sbs::log
