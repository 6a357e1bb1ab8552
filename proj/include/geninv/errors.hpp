#pragma once

#include <stdexcept>
#include <string>

namespace geninv {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NotSquare : public Error {
public:
    explicit NotSquare(const std::string& msg) : Error(msg) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

class ZeroMatrix : public Error {
public:
    explicit ZeroMatrix(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class MissingContext : public Error {
public:
    explicit MissingContext(const std::string& msg) : Error(msg) {}
};

class UnsupportedTag : public Error {
public:
    explicit UnsupportedTag(const std::string& msg) : Error(msg) {}
};

class UnknownTheorem : public Error {
public:
    explicit UnknownTheorem(const std::string& msg) : Error(msg) {}
};

class MalformedInputs : public Error {
public:
    explicit MalformedInputs(const std::string& msg) : Error(msg) {}
};

class InvalidSpec : public Error {
public:
    explicit InvalidSpec(const std::string& msg) : Error(msg) {}
};

class InverseNotExists : public Error {
public:
    explicit InverseNotExists(const std::string& msg) : Error(msg) {}
};

class IndexTooHighError : public Error {
public:
    explicit IndexTooHighError(const std::string& msg) : Error(msg) {}
};

// A closed-form construction failed its own defining-equation recheck.
// Reaching this is a bug in the library, never a property of the input.
class InternalCheckFailure : public Error {
public:
    explicit InternalCheckFailure(const std::string& msg) : Error(msg) {}
};

} // namespace geninv
