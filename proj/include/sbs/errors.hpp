#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sbs {

// Bad configuration or invalid command line input. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Failure inside a pipeline stage (unreadable corpus, malformed rows past
// tolerance, I/O trouble while writing artifacts). Maps to exit code 1.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& message)
        : std::runtime_error("[" + stage + "] " + message), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

} // namespace sbs
