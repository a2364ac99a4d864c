#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pwalk {

enum class Errc {
  EmptyVertexSet,
  EmptyEdgeSet,
  UnknownVertexInEdge,
  NonIncidenceAttribute,
  DuplicateId,
  InvalidInterval,
  KindMismatch,
  MissingAttribute,
  MissingIncidenceAttribute,
  MissingEdgeAttribute,
  NodeSetMismatch,
  UnlabeledNode,
  UnknownNode,
  EmptyCollection,
  SampleOutsideSupport,
  MalformedRow,
  InconsistentClass,
  EmptyData,
  SelfLoopArc,
  InvalidPredicate,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

// Raised by every library operation on contract violations. The code is stable;
// the message carries the offending ids or line numbers.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pwalk
