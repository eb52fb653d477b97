#pragma once

#include <stdexcept>
#include <string>

namespace sentiline {

// Error categories map onto CLI exit codes: input -> 2, empty -> 3, numeric -> 4.
enum class ErrorKind { input, empty, numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    static Error input(const std::string& msg) { return Error(ErrorKind::input, msg); }
    static Error empty(const std::string& msg) { return Error(ErrorKind::empty, msg); }
    static Error numeric(const std::string& msg) { return Error(ErrorKind::numeric, msg); }

private:
    ErrorKind kind_;
};

} // namespace sentiline
