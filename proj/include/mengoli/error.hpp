#pragma once

#include <stdexcept>
#include <string>

namespace mengoli {

/// Raised when an argument violates a documented precondition. The message
/// names the violated condition so the CLI can surface it verbatim.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& condition)
        : std::invalid_argument(condition) {}
};

}  // namespace mengoli
