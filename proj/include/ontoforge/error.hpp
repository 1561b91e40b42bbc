#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ontoforge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; column is 0 when unknown.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnsupportedConstruct : public Error {
public:
    UnsupportedConstruct(std::string construct, std::size_t line)
        : Error("unsupported construct " + construct + " at line " + std::to_string(line)),
          construct_(std::move(construct)), line_(line) {}

    const std::string& construct() const noexcept { return construct_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string construct_;
    std::size_t line_;
};

class UnknownIri : public Error {
public:
    explicit UnknownIri(const std::string& iri) : Error("unknown IRI: " + iri) {}
};

class LabelError : public Error {
public:
    using Error::Error;
};

class SamplingError : public Error {
public:
    using Error::Error;
};

/// Wraps a module error with the pipeline stage it came from.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& what)
        : Error(stage + ": " + what), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace ontoforge
