#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nestobetti {

enum class ErrorCode {
  // validation / parsing
  MissingSingleton,
  UnionAxiomViolated,
  EmptyMember,
  MemberOutsideGround,
  LabelOutOfRange,
  LabelOutsideGround,
  VertexNotInBuildingSet,
  ParseError,
  LoopEdge,
  InvalidArgument,
  // preconditions
  NotChordal,
  NotConnected,
  Unbounded,
  EmptyInterval,
  NotAlternatingBPermutation,
  ChainHasDecreasingPosition,
  // resource bounds
  TooLarge,
  GroundTooLarge,
};

std::string_view to_string(ErrorCode code);

/// Process exit status used by the command line tool for an error class.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nestobetti
