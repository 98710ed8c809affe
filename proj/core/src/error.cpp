#include "rdom/error.hpp"

namespace rdom {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NoPath: return "NoPath";
    case Errc::HostMismatch: return "HostMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadOrder: return "BadOrder";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::UnsupportedResidue: return "UnsupportedResidue";
    case Errc::BadResidue: return "BadResidue";
    case Errc::BadTail: return "BadTail";
    case Errc::NotStrong: return "NotStrong";
    case Errc::BadLength: return "BadLength";
    case Errc::ResidueMismatch: return "ResidueMismatch";
    case Errc::ConnectorMismatch: return "ConnectorMismatch";
    case Errc::TooFewCycles: return "TooFewCycles";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::HypothesisUnmet: return "HypothesisUnmet";
    case Errc::NoAttachment: return "NoAttachment";
    case Errc::NotEnoughDisjointCycles: return "NotEnoughDisjointCycles";
    case Errc::NotStrongClass: return "NotStrongClass";
    case Errc::WrongClass: return "WrongClass";
    case Errc::TooLargeForFallback: return "TooLargeForFallback";
    case Errc::InvalidWitness: return "InvalidWitness";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::SpecInvalid: return "SpecInvalid";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rdom
