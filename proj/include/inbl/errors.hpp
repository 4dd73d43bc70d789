#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inbl {

// Out-of-range significance, value, or bit position.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Masks, snapshots, or terms built for a different number of noise-bits.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two-input gates need three separate noise-bits.
class DistinctnessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A realized string mask has zero or two components set in some pair.
class UndecodableError : public std::runtime_error {
public:
    UndecodableError(const std::string &what, int significance)
        : std::runtime_error(what), significance_(significance) {}
    int significance() const noexcept { return significance_; }

private:
    int significance_;
};

class ScheduleError : public std::invalid_argument {
public:
    ScheduleError(const std::string &what, std::size_t gate_index)
        : std::invalid_argument(what), gate_index_(gate_index) {}
    std::size_t gate_index() const noexcept { return gate_index_; }

private:
    std::size_t gate_index_;
};

// Circuit text diagnostics; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          message_(message),
          line_(line),
          column_(column) {}
    const std::string &message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace inbl
