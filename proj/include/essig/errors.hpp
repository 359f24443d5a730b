#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace essig {

// Requested ambient tensor space exceeds the configured size limit.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A computed table disagrees with its transcribed reference.
class TableMismatchError : public std::runtime_error {
public:
    TableMismatchError(const std::string& what, std::string diff)
        : std::runtime_error(what + "\n" + diff), diff_(std::move(diff)) {}
    const std::string& diff() const { return diff_; }

private:
    std::string diff_;
};

// decompose() exhausted its search. Carries the offending signature as a
// structured payload; such a signature would be a genuine counterexample.
class DecomposeFailure : public std::runtime_error {
public:
    DecomposeFailure(const std::string& what, std::string payload)
        : std::runtime_error(what), payload_(std::move(payload)) {}
    const std::string& payload() const { return payload_; }

private:
    std::string payload_;
};

// Exit-code contract of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitGuard = 2,
    kExitMismatch = 3,
    kExitCounterexample = 4,
};

int exit_code_for(const std::exception& e);

}  // namespace essig
