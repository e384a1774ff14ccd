#pragma once

#include <stdexcept>
#include <string>

namespace revrec {

// Unreadable or missing file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input. Message names the file and line where known.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

// Input violates a documented contract (duplicate ids, dangling references).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested computation lacks required data or settings.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace revrec
