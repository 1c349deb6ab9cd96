#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dicolor {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad files, bad arguments, violated preconditions.
class InputError : public Error {
public:
    using Error::Error;
};

/// An exact search was refused because the instance exceeds its size gate.
class SizeLimitError : public Error {
public:
    SizeLimitError(const std::string& what, int limit)
        : Error(what), limit_(limit) {}

    int limit() const { return limit_; }

private:
    int limit_;
};

/// Precondition failure that carries a directed cycle as evidence.
class CycleError : public InputError {
public:
    CycleError(const std::string& what, std::vector<int> cycle)
        : InputError(what), cycle_(std::move(cycle)) {}

    const std::vector<int>& cycle() const { return cycle_; }

private:
    std::vector<int> cycle_;
};

/// Precondition failure that carries a directed path as evidence.
class PathError : public InputError {
public:
    PathError(const std::string& what, std::vector<int> path)
        : InputError(what), path_(std::move(path)) {}

    const std::vector<int>& path() const { return path_; }

private:
    std::vector<int> path_;
};

}  // namespace dicolor
