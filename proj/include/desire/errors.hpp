#pragma once

#include <stdexcept>
#include <string>

namespace desire {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedDocument : Error {
  using Error::Error;
};
struct UnknownThing : Error {
  using Error::Error;
};
struct PayloadMismatch : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct WrongPayload : Error {
  using Error::Error;
};
struct LawsUnverified : Error {
  using Error::Error;
};
struct UniverseTooLarge : Error {
  using Error::Error;
};
struct EmptyRepresenterSet : Error {
  using Error::Error;
};
struct NotCoherent : Error {
  using Error::Error;
};
struct UnknownClaim : Error {
  using Error::Error;
};
struct WrongUniverse : Error {
  using Error::Error;
};

}  // namespace desire
