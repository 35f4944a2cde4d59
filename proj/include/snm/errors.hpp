#pragma once

#include <stdexcept>
#include <string>

namespace snm {

/// Error taxonomy shared by all modules. `Usage` maps to CLI exit code 2,
/// everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    InvalidName,
    Parse,
    DuplicateRecord,
    InvalidRecord,
    InvalidPair,
    UnknownActor,
    NoPapers,
    EmptyInput,
    InvalidArgument,
    SingularDesign,
    DegenerateSequence,
    DegenerateTotal,
    Usage,
    Io,
  };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace snm
