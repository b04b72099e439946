#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solvlat {

/// Input error with a 1-based source position.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                message),
          m_line(line), m_column(column)
    {
    }

    std::size_t line() const { return m_line; }
    std::size_t column() const { return m_column; }

private:
    std::size_t m_line;
    std::size_t m_column;
};

}  // namespace solvlat
