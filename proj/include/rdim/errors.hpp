#ifndef RDIM_ERRORS_HPP
#define RDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rdim {

/// Malformed or mutually incompatible inputs (bad expression, ring mismatch,
/// schema violation, invalid quiver, ...). CLI exit status 1.
class InputError : public std::runtime_error {
public:
    InputError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// A derived lower bound exceeded a derived upper bound. CLI exit status 2.
class InconsistencyError : public std::runtime_error {
public:
    InconsistencyError(const std::string& message, std::string trace_text)
        : std::runtime_error(message), trace_(std::move(trace_text)) {}
    const std::string& trace_text() const { return trace_; }

private:
    std::string trace_;
};

} // namespace rdim

#endif
