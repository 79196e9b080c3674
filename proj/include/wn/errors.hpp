#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace wn {

// Input-side failures map to CLI exit code 2, everything else to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(std::string file, std::size_t line, std::size_t column, const std::string& what)
        : InputError(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                     what),
          file_(std::move(file)),
          line_(line),
          column_(column) {}

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string file_;
    std::size_t line_;
    std::size_t column_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class UnknownSynsetError : public InputError {
public:
    explicit UnknownSynsetError(const std::string& id)
        : InputError("unknown synset id: " + id), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

class NonPositiveValueError : public InputError {
public:
    NonPositiveValueError(std::size_t index, double value)
        : InputError("value at index " + std::to_string(index) +
                     " is below 1: " + std::to_string(value)),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class InsufficientBinsError : public InputError {
public:
    using InputError::InputError;
};

class InsufficientClassesError : public InputError {
public:
    using InputError::InputError;
};

class ZeroSupremacyError : public InputError {
public:
    using InputError::InputError;
};

class EmptyPairSetError : public InputError {
public:
    using InputError::InputError;
};

class IdenticalLayerTagsError : public InputError {
public:
    using InputError::InputError;
};

}  // namespace wn
