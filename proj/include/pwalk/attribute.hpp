#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pwalk {

/// Closed time interval [lo, hi]. Build through make_interval() to get the lo <= hi check.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Interval&) const = default;
  bool contains(double t) const noexcept { return lo <= t && t <= hi; }
};

/// Sorted, duplicate-free set of symbols; use make_set() to canonicalize.
struct FiniteSet {
  std::vector<std::string> elements;

  bool operator==(const FiniteSet&) const = default;
};

struct Boolean {
  bool value = false;
  bool operator==(const Boolean&) const = default;
};

struct Scalar {
  double value = 0.0;
  bool operator==(const Scalar&) const = default;
};

struct Category {
  std::string label;
  bool operator==(const Category&) const = default;
};

struct Timestamp {
  double t = 0.0;
  bool operator==(const Timestamp&) const = default;
};

/// Directed arc endpoints (tail, head).
struct DirectionPair {
  std::string source;
  std::string target;
  bool operator==(const DirectionPair&) const = default;
};

using AttributeValue =
    std::variant<Interval, FiniteSet, Boolean, Scalar, Category, Timestamp, DirectionPair>;

/// Named attributes carried by one object (vertex, edge, incidence or line-graph node).
using AttributeMap = std::map<std::string, AttributeValue, std::less<>>;

enum class AttributeKind { Interval, FiniteSet, Boolean, Scalar, Category, Timestamp, DirectionPair };

AttributeKind kind_of(const AttributeValue& value) noexcept;
std::string_view kind_name(AttributeKind kind) noexcept;

Interval make_interval(double lo, double hi);
FiniteSet make_set(std::vector<std::string> elements);

/// Convex hull of two intervals.
Interval hull(const Interval& a, const Interval& b) noexcept;

/// Looks up `name`; throws Errc::MissingAttribute naming `owner` when absent.
const AttributeValue& require(const AttributeMap& attrs, std::string_view name,
                              std::string_view owner);

/// Typed access; throws Errc::KindMismatch when the value holds another kind.
template <class T>
const T& get_as(const AttributeValue& value);

/// Short human-readable rendering, e.g. "[0,1]" or "{A,B}". Used for DOT tooltips and logs.
std::string to_display(const AttributeValue& value);

}  // namespace pwalk
