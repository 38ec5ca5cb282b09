#pragma once

#include <stdexcept>
#include <string>

namespace vjw {

// Process exit codes shared by the CLI and the test drivers.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitPole = 2,
    kExitConfig = 3,
    kExitIo = 4,
    kExitInternal = 5,
};

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public Error {
  public:
    DivisionByZeroError() : Error("division by zero") {}
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Raised when a substitution t_j -> q^{c_j} sends a denominator to zero.
// `denominator` carries the canonical text of the vanishing factor.
class PoleError : public Error {
  public:
    PoleError(const std::string& what, std::string denominator_text)
        : Error(what), denominator(std::move(denominator_text)) {}
    std::string denominator;
};

class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace vjw
