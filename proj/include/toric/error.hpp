#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

// Domain error carrying a stable machine-readable code alongside the message.
// The CLI maps these to {code, message, detail} JSON objects and exit status 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::string detail = {})
        : std::runtime_error(message), code_(std::move(code)), detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

}  // namespace toric
