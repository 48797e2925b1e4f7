#pragma once

#include <stdexcept>
#include <string>

namespace imputebench {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input data: malformed CSV, violated preconditions, impossible requests.
class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(what) {}
};

// Bad configuration: unknown method names, invalid parameter combinations.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace imputebench
