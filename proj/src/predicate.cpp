#include "pwalk/predicate.hpp"

#include <algorithm>
#include <charconv>

#include "pwalk/error.hpp"

namespace pwalk {

bool eval_strong_order(const AttributeValue& a, const AttributeValue& b) {
  return get_as<Interval>(a).hi <= get_as<Interval>(b).lo;
}

bool eval_set_intersects(const AttributeValue& a, const AttributeValue& b,
                         std::size_t threshold) {
  const auto& x = get_as<FiniteSet>(a).elements;
  const auto& y = get_as<FiniteSet>(b).elements;
  // Both sides are sorted and unique, so a merge walk counts the intersection.
  std::size_t common = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common >= threshold;
}

bool eval_bool_and(const AttributeValue& a, const AttributeValue& b) {
  return get_as<Boolean>(a).value && get_as<Boolean>(b).value;
}

bool eval_bool_or(const AttributeValue& a, const AttributeValue& b) {
  return get_as<Boolean>(a).value || get_as<Boolean>(b).value;
}

bool eval_category_equal(const AttributeValue& a, const AttributeValue& b) {
  return get_as<Category>(a).label == get_as<Category>(b).label;
}

bool eval_timestamp_leq(const AttributeValue& a, const AttributeValue& b) {
  return get_as<Timestamp>(a).t <= get_as<Timestamp>(b).t;
}

bool eval_direction_chains(const AttributeValue& a, const AttributeValue& b) {
  return get_as<DirectionPair>(a).target == get_as<DirectionPair>(b).source;
}

Predicate Predicate::set_intersects(std::size_t threshold) {
  if (threshold == 0) {
    throw Error(Errc::InvalidPredicate, "set-intersects threshold must be positive");
  }
  Predicate p(Kind::SetIntersectsAtLeast);
  p.threshold_ = threshold;
  return p;
}

Predicate Predicate::conjunction(std::vector<PredicateTerm> terms) {
  if (terms.empty()) throw Error(Errc::InvalidPredicate, "and() needs at least one term");
  Predicate p(Kind::Conjunction);
  p.terms_ = std::move(terms);
  return p;
}

bool Predicate::operator()(const AttributeValue& a, const AttributeValue& b) const {
  switch (kind_) {
    case Kind::StrongOrder: return eval_strong_order(a, b);
    case Kind::SetIntersectsAtLeast: return eval_set_intersects(a, b, threshold_);
    case Kind::BoolAnd: return eval_bool_and(a, b);
    case Kind::BoolOr: return eval_bool_or(a, b);
    case Kind::CategoryEqual: return eval_category_equal(a, b);
    case Kind::TimestampLessEq: return eval_timestamp_leq(a, b);
    case Kind::DirectionChains: return eval_direction_chains(a, b);
    case Kind::Conjunction: break;
  }
  throw Error(Errc::InvalidPredicate, "a conjunction must be evaluated on attribute maps");
}

bool Predicate::evaluate(const AttributeMap& a, const AttributeMap& b,
                         std::string_view attribute) const {
  if (kind_ == Kind::Conjunction) {
    return std::all_of(terms_.begin(), terms_.end(), [&](const PredicateTerm& term) {
      return term.predicate.evaluate(a, b, term.attribute);
    });
  }
  return (*this)(require(a, attribute, "node"), require(b, attribute, "node"));
}

std::vector<std::string> Predicate::attributes(std::string_view attribute) const {
  if (kind_ != Kind::Conjunction) return {std::string(attribute)};
  std::vector<std::string> out;
  for (const auto& term : terms_) {
    for (auto& name : term.predicate.attributes(term.attribute)) {
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    }
  }
  return out;
}

bool Predicate::symmetric() const {
  switch (kind_) {
    case Kind::SetIntersectsAtLeast:
    case Kind::BoolAnd:
    case Kind::BoolOr:
    case Kind::CategoryEqual:
      return true;
    case Kind::Conjunction:
      return std::all_of(terms_.begin(), terms_.end(),
                         [](const PredicateTerm& t) { return t.predicate.symmetric(); });
    default:
      return false;
  }
}

std::string Predicate::to_string() const {
  switch (kind_) {
    case Kind::StrongOrder: return "strong-order";
    case Kind::SetIntersectsAtLeast: return "set-intersects:t=" + std::to_string(threshold_);
    case Kind::BoolAnd: return "bool-and";
    case Kind::BoolOr: return "bool-or";
    case Kind::CategoryEqual: return "category-equal";
    case Kind::TimestampLessEq: return "timestamp-leq";
    case Kind::DirectionChains: return "direction-chains";
    case Kind::Conjunction: break;
  }
  std::string out = "and(";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ",";
    out += terms_[i].attribute + ":" + terms_[i].predicate.to_string();
  }
  return out + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void invalid(std::string_view spec, std::string_view why) {
  throw Error(Errc::InvalidPredicate, "'" + std::string(spec) + "': " + std::string(why));
}

// Splits on commas that are not nested inside parentheses.
std::vector<std::string_view> split_top_level(std::string_view body, std::string_view spec) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')' && --depth < 0) invalid(spec, "unbalanced parentheses");
    if (body[i] == ',' && depth == 0) {
      parts.push_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) invalid(spec, "unbalanced parentheses");
  parts.push_back(trim(body.substr(start)));
  return parts;
}

}  // namespace

Predicate parse_predicate(std::string_view spec) {
  spec = trim(spec);
  if (spec.starts_with("and(")) {
    if (!spec.ends_with(")")) invalid(spec, "missing closing parenthesis");
    std::vector<PredicateTerm> terms;
    for (auto part : split_top_level(spec.substr(4, spec.size() - 5), spec)) {
      if (part.empty()) invalid(spec, "empty term");
      terms.push_back(parse_predicate_term(part));
      if (terms.back().attribute.empty()) invalid(spec, "term needs an attribute name");
    }
    return Predicate::conjunction(std::move(terms));
  }
  if (spec == "strong-order") return Predicate::strong_order();
  if (spec == "bool-and") return Predicate::bool_and();
  if (spec == "bool-or") return Predicate::bool_or();
  if (spec == "category-equal") return Predicate::category_equal();
  if (spec == "timestamp-leq") return Predicate::timestamp_leq();
  if (spec == "direction-chains") return Predicate::direction_chains();
  if (spec == "set-intersects") return Predicate::set_intersects(1);
  if (spec.starts_with("set-intersects:t=")) {
    auto digits = spec.substr(17);
    std::size_t t = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t);
    if (ec != std::errc{} || end != digits.data() + digits.size() || t == 0) {
      invalid(spec, "threshold must be a positive integer");
    }
    return Predicate::set_intersects(t);
  }
  invalid(spec, "unknown predicate");
}

PredicateTerm parse_predicate_term(std::string_view text) {
  text = trim(text);
  if (text.starts_with("and(")) return {std::string(), parse_predicate(text)};
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) {
    invalid(text, "expected attr:predicate");
  }
  return {std::string(trim(text.substr(0, colon))), parse_predicate(text.substr(colon + 1))};
}

}  // namespace pwalk
