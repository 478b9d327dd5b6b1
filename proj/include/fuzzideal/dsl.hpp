#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fuzzideal/errors.hpp"
#include "fuzzideal/fuzzy.hpp"
#include "fuzzideal/ring.hpp"
#include "fuzzideal/ring_spec.hpp"

namespace fuzzideal {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected);

  const std::string& message() const { return message_; }
  SourceSpan span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string message_;
  SourceSpan span_;
  std::vector<std::string> expected_;
};

/// A fuzzy spec that parses but whose levels do not form a valid chain:
/// values not strictly decreasing, a level that adds nothing, or a last
/// level that is not the whole ring. level() counts from 1.
class ChainError : public InvalidFuzzyIdeal {
 public:
  ChainError(const std::string& message, std::size_t level, SourceSpan span)
      : InvalidFuzzyIdeal(message), level_(level), span_(span) {}
  std::size_t level() const { return level_; }
  SourceSpan span() const { return span_; }

 private:
  std::size_t level_;
  SourceSpan span_;
};

/// ringspec := "Z" | "Zn(" nat ")" | "Mat(" nat "," ringspec ")"
///           | "Tri(" nat "," ringspec ")" | "Prod(" ringspec ("," ringspec)+ ")"
///           | "Quot(" ringspec "," idealspec ")"
/// idealspec := "<" (elem ("," elem)*)? ">" | "<*>"
RingSpec parse_ring_spec(std::string_view text);

/// elem := integer | "[" elem ("," elem)* "]" | "(" elem ("," elem)+ ")"
ElementLiteral parse_element_literal(std::string_view text);
/// Literal typed against the ring; residues are reduced, shape errors raise
/// ParseError at the offending literal.
Element parse_element(const Ring& ring, std::string_view text);

/// "0", "1", "p/q" (q <= 10^6) or a decimal with at most six fraction digits.
Value parse_value(std::string_view text);
/// Comma separated values, e.g. a palette "1, 3/4, 1/2".
std::vector<Value> parse_value_list(std::string_view text);

/// fuzzy := "{" value ":" idealspec ("," value ":" idealspec)* "}"
/// Level j is the ideal generated by its elements and all earlier levels.
FuzzyIdeal parse_fuzzy_spec(const RingPtr& ring, std::string_view text);

std::string format(const RingSpec& spec);
std::string format(const ElementLiteral& literal);
std::string format_element(const Ring& ring, const Element& x);
/// "<g1, ..., gk>" with the canonical generators over the zero ideal.
std::string format_ideal(const Ring& ring, const Ideal& ideal);
/// Canonical cut-chain text; parse_fuzzy_spec(format(F)) == F.
std::string format(const FuzzyIdeal& f);

}  // namespace fuzzideal
