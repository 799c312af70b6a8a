#pragma once

#include <stdexcept>
#include <string>

namespace posmap {

// Base class for all library errors. `kind()` is a stable machine-readable
// tag, used verbatim in the CLI's error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define POSMAP_DEFINE_ERROR(Name)                          \
  class Name : public Error {                              \
   public:                                                 \
    explicit Name(const std::string& message)              \
        : Error(#Name, message) {}                         \
  }

POSMAP_DEFINE_ERROR(NonHermitianInput);
POSMAP_DEFINE_ERROR(DimensionMismatch);
POSMAP_DEFINE_ERROR(ParameterOutOfRange);
POSMAP_DEFINE_ERROR(InvalidU);
POSMAP_DEFINE_ERROR(InvalidState);
POSMAP_DEFINE_ERROR(InvalidChannel);
POSMAP_DEFINE_ERROR(InsufficientMoments);
POSMAP_DEFINE_ERROR(DegenerateNormalization);
POSMAP_DEFINE_ERROR(DegenerateTA);
POSMAP_DEFINE_ERROR(NoSignChange);
POSMAP_DEFINE_ERROR(NonMonotoneBracket);
POSMAP_DEFINE_ERROR(InvalidConfig);

#undef POSMAP_DEFINE_ERROR

}  // namespace posmap
