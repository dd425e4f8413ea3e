#pragma once

#include <stdexcept>
#include <string>

namespace blockbiset {

/// Base class of every error raised by the library. The class name of each
/// subclass is reported verbatim by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define BLOCKBISET_ERROR(Name)                                        \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

BLOCKBISET_ERROR(InvalidPermutation);
BLOCKBISET_ERROR(ClosureExceedsBound);
BLOCKBISET_ERROR(NotPGroup);
BLOCKBISET_ERROR(NotASubgroup);
BLOCKBISET_ERROR(SplittingFailure);
BLOCKBISET_ERROR(ArgumentNotUntwisted);
BLOCKBISET_ERROR(NotBifree);
BLOCKBISET_ERROR(NonIntegralSolution);
BLOCKBISET_ERROR(NotFixedByK);
BLOCKBISET_ERROR(InconsistentDefect);
BLOCKBISET_ERROR(SolveFailure);
BLOCKBISET_ERROR(NotSemicharacteristic);
BLOCKBISET_ERROR(DecompositionFailure);
BLOCKBISET_ERROR(NoWitness);
BLOCKBISET_ERROR(ParseError);

#undef BLOCKBISET_ERROR

}  // namespace blockbiset
