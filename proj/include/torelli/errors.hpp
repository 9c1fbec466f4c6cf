#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

// Base class for all domain errors. `name()` is the stable machine-readable
// identifier surfaced by the CLI; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& msg)
      : std::runtime_error(msg), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define TORELLI_DEFINE_ERROR(Name)                            \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  }

TORELLI_DEFINE_ERROR(DegenerateTuple);
TORELLI_DEFINE_ERROR(ExhaustedSampleSpace);
TORELLI_DEFINE_ERROR(IdenticalPoints);
TORELLI_DEFINE_ERROR(AmbientMismatch);
TORELLI_DEFINE_ERROR(LengthMismatch);
TORELLI_DEFINE_ERROR(DegreeMismatch);
TORELLI_DEFINE_ERROR(MalformedInput);
TORELLI_DEFINE_ERROR(OutOfRange);
TORELLI_DEFINE_ERROR(RepeatedEntry);
TORELLI_DEFINE_ERROR(DegreeTooLarge);
TORELLI_DEFINE_ERROR(NotAGroupElement);
TORELLI_DEFINE_ERROR(MissingProvenance);
TORELLI_DEFINE_ERROR(NoExtension);
TORELLI_DEFINE_ERROR(TargetLargerThanSource);
TORELLI_DEFINE_ERROR(LiftVerificationFailed);
TORELLI_DEFINE_ERROR(InvalidParameter);

#undef TORELLI_DEFINE_ERROR

}  // namespace torelli
