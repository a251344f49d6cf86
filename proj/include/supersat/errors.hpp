#ifndef SUPERSAT_ERRORS_HPP
#define SUPERSAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supersat {

// Raised when an exhaustive routine would exceed its configured size
// guard.  Maps to CLI exit code 2.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace supersat

#endif
