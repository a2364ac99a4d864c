#include "pwalk/error.hpp"

namespace pwalk {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyVertexSet: return "EmptyVertexSet";
    case Errc::EmptyEdgeSet: return "EmptyEdgeSet";
    case Errc::UnknownVertexInEdge: return "UnknownVertexInEdge";
    case Errc::NonIncidenceAttribute: return "NonIncidenceAttribute";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::MissingAttribute: return "MissingAttribute";
    case Errc::MissingIncidenceAttribute: return "MissingIncidenceAttribute";
    case Errc::MissingEdgeAttribute: return "MissingEdgeAttribute";
    case Errc::NodeSetMismatch: return "NodeSetMismatch";
    case Errc::UnlabeledNode: return "UnlabeledNode";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::EmptyCollection: return "EmptyCollection";
    case Errc::SampleOutsideSupport: return "SampleOutsideSupport";
    case Errc::MalformedRow: return "MalformedRow";
    case Errc::InconsistentClass: return "InconsistentClass";
    case Errc::EmptyData: return "EmptyData";
    case Errc::SelfLoopArc: return "SelfLoopArc";
    case Errc::InvalidPredicate: return "InvalidPredicate";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace pwalk
