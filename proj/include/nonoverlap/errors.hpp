#pragma once

#include <stdexcept>
#include <string>

namespace nonoverlap {

/// A requested universe or search space exceeds the configured resource guard.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A quantity falls outside the hypothesis of the statement being checked
/// (for example a word-set density of 0 or 1, for which no certificate exists).
class hypothesis_error : public std::domain_error {
public:
    explicit hypothesis_error(const std::string& what) : std::domain_error(what) {}
};

/// Malformed word-set text input; line is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace nonoverlap
