#ifndef SPECTRAGRAFT_ERRORS_HPP
#define SPECTRAGRAFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spectragraft {

enum class errc {
    invalid_argument,
    parse,
    disconnected,
    not_a_tree,
    cap_exceeded,
    no_convergence,
    internal,
};

/// Library error carrying a machine-usable code plus a one-line message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

const char* errc_name(errc code);

} // namespace spectragraft

#endif
