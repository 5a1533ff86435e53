#pragma once

#include <stdexcept>
#include <string>

namespace kummerlcp {

// Violated precondition, named. The CLI maps this to exit code 2.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because it exceeds a configured enumeration budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction's own verification failed: this signals an implementation
// bug, never a bad input. The CLI maps this to exit code 1.
class certificate_error : public std::runtime_error {
public:
    explicit certificate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kummerlcp
