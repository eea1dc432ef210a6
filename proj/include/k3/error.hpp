#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace k3 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct NotPrime : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

// q is not congruent to 1 mod m
struct NotAdmissible : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct ConductorMismatch : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct NonIntegralOrbit : Error {
  using Error::Error;
};

struct NotDelsarte : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct SingularExponents : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct CoverInconsistent : Error {
  using Error::Error;
};

struct ActionNotPreserved : Error {
  using Error::Error;
};

struct UnknownEntry : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct LatticeError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct TooLarge : Error {
  using Error::Error;
};

class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidArgument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace k3
