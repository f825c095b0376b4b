#ifndef ANNCAT_ERROR_HPP_
#define ANNCAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace anncat {

  // Tables of the wrong dimensions or with entries outside the index range.
  struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // A diagram term whose composite arrows do not line up: the diagram is
  // encoded wrongly, which is distinct from an axiom failing.
  struct DiagramTypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Malformed constraint request (arity, unknown kind, missing derived units).
  struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Search space exceeding the exhaustive bound, or otherwise unusable.
  struct SpaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Unreadable or ill-formed input document.
  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

}  // namespace anncat

#endif  // ANNCAT_ERROR_HPP_
