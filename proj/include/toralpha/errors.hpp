#pragma once

#include <stdexcept>
#include <string>

namespace toralpha {

// Error categories map onto CLI exit codes: parse=2, domain=3, invariance=4,
// capacity=5.  Library code throws these; the CLI translates.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

class InvarianceError : public std::runtime_error {
public:
    explicit InvarianceError(const std::string& msg) : std::runtime_error(msg) {}
};

class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Contract violations (dimension mismatches, rank errors) are programming
// errors rather than bad user input.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace toralpha
