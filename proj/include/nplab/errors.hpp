#ifndef NPLAB_ERRORS_HPP
#define NPLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nplab {

/// Malformed textual input. `position` is a 0-based character offset.
class parse_error : public std::invalid_argument {
public:
  parse_error(const std::string &what, std::size_t position)
      : std::invalid_argument(what + " at position " +
                              std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A configured resource cap was hit. Distinct from any verdict.
class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace nplab

#endif // NPLAB_ERRORS_HPP
