#ifndef RIORDAN_ERRORS_HPP
#define RIORDAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riordan {

// Base class for all domain violations raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OrderExceeded : Error {
  using Error::Error;
};
struct NotAUnit : Error {
  using Error::Error;
};
struct CompositionDomain : Error {
  using Error::Error;
};
struct NotRevertible : Error {
  using Error::Error;
};
struct NoSeriesSqrt : Error {
  using Error::Error;
};
struct ExpDomain : Error {
  using Error::Error;
};
struct LogDomain : Error {
  using Error::Error;
};
struct NotProper : Error {
  using Error::Error;
};
struct NotInvertible : Error {
  using Error::Error;
};
struct NotTridiagonal : Error {
  using Error::Error;
};
struct NotEnoughMoments : Error {
  using Error::Error;
};
struct NotEnoughCoefficients : Error {
  using Error::Error;
};
struct SingularHankel : Error {
  using Error::Error;
};
struct DegenerateFamily : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace riordan

#endif
