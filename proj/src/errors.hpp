#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

enum class Status {
    ok = 0,
    invalid_argument,
    size_error,
    range_error,
    domain_error,
    pole_error,
    degenerate_case,
    convergence_error,
    instability_error,
    validation_error,
    parse_error,
    io_error,
    data_error,
    internal_error,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
public:
    Error(Status code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Status code() const { return code_; }

private:
    Status code_;
};

[[noreturn]] inline void fail(Status code, const std::string& msg) { throw Error(code, msg); }

} // namespace zetalab
