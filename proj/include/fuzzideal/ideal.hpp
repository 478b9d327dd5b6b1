#pragma once

#include <compare>
#include <cstdint>
#include <variant>

#include "fuzzideal/element_set.hpp"

namespace fuzzideal {

/// A crisp two-sided ideal.
///
/// Over a table ring it is the full member set. Over the integers it is the
/// nonnegative generator n of nZ (0 is the zero ideal, 1 is the ring).
/// Operations that need the ambient ring live in ideals.hpp.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(ElementSet members) : rep_(std::move(members)) {}
  static Ideal multiples(std::uint64_t n) {
    Ideal i;
    i.rep_ = n;
    return i;
  }

  bool is_table() const { return std::holds_alternative<ElementSet>(rep_); }
  const ElementSet& members() const { return std::get<ElementSet>(rep_); }
  std::uint64_t generator() const { return std::get<std::uint64_t>(rep_); }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
    if (a.is_table() && b.is_table()) return a.members() <=> b.members();
    if (!a.is_table() && !b.is_table()) return a.generator() <=> b.generator();
    return a.rep_.index() <=> b.rep_.index();
  }

  std::size_t hash() const {
    return is_table() ? members().hash() : std::hash<std::uint64_t>{}(generator());
  }

 private:
  std::variant<ElementSet, std::uint64_t> rep_{std::uint64_t{0}};
};

struct IdealHash {
  std::size_t operator()(const Ideal& i) const { return i.hash(); }
};

}  // namespace fuzzideal
