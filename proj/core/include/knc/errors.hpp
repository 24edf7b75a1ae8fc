#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knc {

// Root of the library's exception hierarchy. kind() is a stable machine tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero")
        : Error("division_by_zero", what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

enum class CurveDefect { DuplicateRoot, ZeroRoot, OddRootCount, RootCollision, Empty };

const char* to_string(CurveDefect d);

class InvalidCurve : public Error {
public:
    InvalidCurve(CurveDefect defect, const std::string& what)
        : Error(to_string(defect), what), defect_(defect) {}
    CurveDefect defect() const noexcept { return defect_; }

private:
    CurveDefect defect_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error("parse_error", what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A flip automorphism exists but its parameter is not expressible in the working field.
class UndeterminedGroup : public Error {
public:
    explicit UndeterminedGroup(const std::string& what) : Error("undetermined_group", what) {}
};

// An internal identity failed. Never expected on valid input.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error("consistency_error", what) {}
};

class NonIntegerMultiplicity : public Error {
public:
    explicit NonIntegerMultiplicity(const std::string& what)
        : Error("non_integer_multiplicity", what) {}
};

}  // namespace knc
