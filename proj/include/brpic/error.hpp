#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace brpic {

// Library error with a stable machine-readable code ("NotAssociative",
// "RepeatedRoot", ...) next to the human-readable message. The CLI maps
// these to exit status 1 and prints the code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace brpic
