#ifndef NCBOND_ERRORS_HPP
#define NCBOND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncbond {

// Input that cannot be parsed or does not satisfy a documented precondition.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation was refused because the instance exceeds a documented limit.
struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct NotGradedError : std::runtime_error {
  explicit NotGradedError(const std::string& what) : std::runtime_error(what) {}
};

struct NotLatticeError : std::runtime_error {
  explicit NotLatticeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotElLabelingError : std::runtime_error {
  explicit NotElLabelingError(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree by theorem disagreed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ncbond

#endif
