#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pwalk/attribute.hpp"

namespace pwalk {

// Built-in binary predicates over attribute values. Each throws Errc::KindMismatch
// when handed a value of the wrong kind.

/// Strong interval order: a precedes b iff a.hi <= b.lo (closed, boundary inclusive).
bool eval_strong_order(const AttributeValue& a, const AttributeValue& b);
/// |a ∩ b| >= threshold for finite sets.
bool eval_set_intersects(const AttributeValue& a, const AttributeValue& b,
                         std::size_t threshold = 1);
bool eval_bool_and(const AttributeValue& a, const AttributeValue& b);
bool eval_bool_or(const AttributeValue& a, const AttributeValue& b);
bool eval_category_equal(const AttributeValue& a, const AttributeValue& b);
bool eval_timestamp_leq(const AttributeValue& a, const AttributeValue& b);
/// Head of the first arc equals tail of the second.
bool eval_direction_chains(const AttributeValue& a, const AttributeValue& b);

struct PredicateTerm;

/// A binary predicate q(tau(a), tau(b)) used to select permissible line-graph arcs.
///
/// Simple predicates read one attribute, named by the caller at evaluation time.
/// A conjunction carries its own (attribute, predicate) terms and ignores the caller's
/// attribute name.
class Predicate {
 public:
  enum class Kind {
    StrongOrder,
    SetIntersectsAtLeast,
    BoolAnd,
    BoolOr,
    CategoryEqual,
    TimestampLessEq,
    DirectionChains,
    Conjunction,
  };

  static Predicate strong_order() { return Predicate(Kind::StrongOrder); }
  static Predicate set_intersects(std::size_t threshold = 1);
  static Predicate bool_and() { return Predicate(Kind::BoolAnd); }
  static Predicate bool_or() { return Predicate(Kind::BoolOr); }
  static Predicate category_equal() { return Predicate(Kind::CategoryEqual); }
  static Predicate timestamp_leq() { return Predicate(Kind::TimestampLessEq); }
  static Predicate direction_chains() { return Predicate(Kind::DirectionChains); }
  static Predicate conjunction(std::vector<PredicateTerm> terms);

  Kind kind() const noexcept { return kind_; }
  std::size_t threshold() const noexcept { return threshold_; }
  const std::vector<PredicateTerm>& terms() const noexcept { return terms_; }

  /// Applies a simple predicate to two values. Conjunctions throw InvalidPredicate here.
  bool operator()(const AttributeValue& a, const AttributeValue& b) const;

  /// Evaluates against two attribute maps, reading `attribute` for simple predicates.
  bool evaluate(const AttributeMap& a, const AttributeMap& b, std::string_view attribute) const;

  /// Attribute names this predicate reads, given the caller's attribute for simple kinds.
  std::vector<std::string> attributes(std::string_view attribute) const;

  /// True when q(a, b) == q(b, a) for all inputs.
  bool symmetric() const;

  /// Canonical spec string, parseable by parse_predicate().
  std::string to_string() const;

 private:
  explicit Predicate(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::size_t threshold_ = 1;
  std::vector<PredicateTerm> terms_;
};

struct PredicateTerm {
  std::string attribute;
  Predicate predicate;
};

/// Parses a predicate spec: "strong-order", "set-intersects" / "set-intersects:t=2",
/// "bool-and", "bool-or", "category-equal", "timestamp-leq", "direction-chains",
/// or "and(attr:spec,attr:spec,...)". Throws Errc::InvalidPredicate.
Predicate parse_predicate(std::string_view spec);

/// Parses "attr:spec" or a bare "and(...)" (attribute left empty).
PredicateTerm parse_predicate_term(std::string_view text);

}  // namespace pwalk
