#ifndef VISIPOLY_ERRORS_HPP
#define VISIPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace visipoly {

/// Invalid construction or call parameter (e.g. a cycle on two vertices).
class parameter_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation was violated.
class precondition_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A closed form was asked for outside its hypotheses. The message names the
/// fallback route that does apply.
class dispatch_error : public parameter_error {
public:
  using parameter_error::parameter_error;
};

/// The input is too large for the requested engine.
class guardrail_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a byte offset for single-record
/// decoders and a 1-based line number for stream readers.
class format_error : public std::runtime_error {
public:
  format_error(const std::string &what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace visipoly

#endif
