#include "pwalk/attribute.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pwalk/error.hpp"

namespace pwalk {

AttributeKind kind_of(const AttributeValue& value) noexcept {
  return static_cast<AttributeKind>(value.index());
}

std::string_view kind_name(AttributeKind kind) noexcept {
  switch (kind) {
    case AttributeKind::Interval: return "interval";
    case AttributeKind::FiniteSet: return "set";
    case AttributeKind::Boolean: return "bool";
    case AttributeKind::Scalar: return "scalar";
    case AttributeKind::Category: return "category";
    case AttributeKind::Timestamp: return "timestamp";
    case AttributeKind::DirectionPair: return "direction";
  }
  return "unknown";
}

Interval make_interval(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    std::ostringstream os;
    os << "interval [" << lo << "," << hi << "] requires lo <= hi";
    throw Error(Errc::InvalidInterval, os.str());
  }
  return Interval{lo, hi};
}

FiniteSet make_set(std::vector<std::string> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FiniteSet{std::move(elements)};
}

Interval hull(const Interval& a, const Interval& b) noexcept {
  return Interval{std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

const AttributeValue& require(const AttributeMap& attrs, std::string_view name,
                              std::string_view owner) {
  auto it = attrs.find(name);
  if (it == attrs.end()) {
    throw Error(Errc::MissingAttribute,
                "attribute '" + std::string(name) + "' missing on " + std::string(owner));
  }
  return it->second;
}

namespace {

template <class T>
constexpr AttributeKind kind_for() {
  if constexpr (std::is_same_v<T, Interval>) return AttributeKind::Interval;
  else if constexpr (std::is_same_v<T, FiniteSet>) return AttributeKind::FiniteSet;
  else if constexpr (std::is_same_v<T, Boolean>) return AttributeKind::Boolean;
  else if constexpr (std::is_same_v<T, Scalar>) return AttributeKind::Scalar;
  else if constexpr (std::is_same_v<T, Category>) return AttributeKind::Category;
  else if constexpr (std::is_same_v<T, Timestamp>) return AttributeKind::Timestamp;
  else return AttributeKind::DirectionPair;
}

std::string format_real(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

}  // namespace

template <class T>
const T& get_as(const AttributeValue& value) {
  if (const auto* p = std::get_if<T>(&value)) return *p;
  throw Error(Errc::KindMismatch, "expected " + std::string(kind_name(kind_for<T>())) +
                                      ", got " + std::string(kind_name(kind_of(value))));
}

template const Interval& get_as<Interval>(const AttributeValue&);
template const FiniteSet& get_as<FiniteSet>(const AttributeValue&);
template const Boolean& get_as<Boolean>(const AttributeValue&);
template const Scalar& get_as<Scalar>(const AttributeValue&);
template const Category& get_as<Category>(const AttributeValue&);
template const Timestamp& get_as<Timestamp>(const AttributeValue&);
template const DirectionPair& get_as<DirectionPair>(const AttributeValue&);

std::string to_display(const AttributeValue& value) {
  struct Visitor {
    std::string operator()(const Interval& v) const {
      return "[" + format_real(v.lo) + "," + format_real(v.hi) + "]";
    }
    std::string operator()(const FiniteSet& v) const {
      std::string out = "{";
      for (std::size_t i = 0; i < v.elements.size(); ++i) {
        if (i) out += ",";
        out += v.elements[i];
      }
      return out + "}";
    }
    std::string operator()(const Boolean& v) const { return v.value ? "true" : "false"; }
    std::string operator()(const Scalar& v) const { return format_real(v.value); }
    std::string operator()(const Category& v) const { return v.label; }
    std::string operator()(const Timestamp& v) const { return "@" + format_real(v.t); }
    std::string operator()(const DirectionPair& v) const { return v.source + "->" + v.target; }
  };
  return std::visit(Visitor{}, value);
}

}  // namespace pwalk
