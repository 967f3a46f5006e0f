#ifndef BGG_ERRORS_HPP
#define BGG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bgg {

/// Malformed or inconsistent input (bad files, unknown names, invalid
/// algebra presentations). Reported as usage errors by the CLI.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bgg

#endif
