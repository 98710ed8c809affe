#pragma once

#include <stdexcept>
#include <string>

namespace rdom {

enum class Errc {
  SelfLoop,
  VertexOutOfRange,
  Disconnected,
  NoPath,
  HostMismatch,
  TooLarge,
  BadOrder,
  IsolatedVertex,
  UnsupportedResidue,
  BadResidue,
  BadTail,
  NotStrong,
  BadLength,
  ResidueMismatch,
  ConnectorMismatch,
  TooFewCycles,
  ConditionViolated,
  HypothesisUnmet,
  NoAttachment,
  NotEnoughDisjointCycles,
  NotStrongClass,
  WrongClass,
  TooLargeForFallback,
  InvalidWitness,
  BoundViolated,
  SpecInvalid,
  RetriesExhausted,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace rdom
