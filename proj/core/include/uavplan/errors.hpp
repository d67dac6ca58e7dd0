#pragma once

#include <stdexcept>
#include <string>

namespace uavplan {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (scene file, plan file, reference CSV).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Invalid argument or violated precondition (out-of-extent point,
/// malformed permutation, bad grid spec, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A mission cannot be realized: endpoint cell blocked with snapping
/// disabled, or no obstacle-free path between a pair of endpoints.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

} // namespace uavplan
