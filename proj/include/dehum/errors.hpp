#ifndef DEHUM_ERRORS_HPP
#define DEHUM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dehum {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    std::size_t line;
};

// Invalid configuration or precondition violation on user-supplied parameters.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Failure of a named pipeline stage; wraps the causing message.
struct StageError : Error {
    StageError(const std::string& stage_name, const std::string& cause)
        : Error("stage '" + stage_name + "' failed: " + cause), stage(stage_name) {}
    std::string stage;
};

} // namespace dehum

#endif
