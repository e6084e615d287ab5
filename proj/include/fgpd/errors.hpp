#pragma once

#include <stdexcept>
#include <string>

namespace fgpd {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleWithT0Flag : Error {
  using Error::Error;
};
struct NotT0 : Error {
  using Error::Error;
};
struct UnknownPoint : Error {
  using Error::Error;
};
struct BadPartition : Error {
  using Error::Error;
};
struct BadComplex : Error {
  using Error::Error;
};
struct Disconnected : Error {
  using Error::Error;
};
struct LiftInconsistency : Error {
  using Error::Error;
};
struct MismatchedProvenance : Error {
  using Error::Error;
};
struct NotAnAction : Error {
  using Error::Error;
};
struct NotContinuous : Error {
  using Error::Error;
};
struct NotComposable : Error {
  using Error::Error;
};
struct NotSimplyConnected : Error {
  using Error::Error;
};
struct SearchCapExceeded : Error {
  using Error::Error;
};
struct MalformedBasic : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace fgpd
