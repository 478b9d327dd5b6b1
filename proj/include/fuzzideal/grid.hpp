#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fuzzideal/fuzzy.hpp"

namespace fuzzideal {

/// Finite set of membership values on which quantifiers over [0, 1] are
/// evaluated.
///
/// Every predicate in this library compares values only against the image
/// of the fuzzy ideal under test. Refining the image by {0, 1} and by the
/// midpoint of each pair of consecutive members gives one representative of
/// every order type a free value can have relative to the image, so a
/// violating assignment of free values can be moved onto grid points
/// without changing any comparison.
class ValueGrid {
 public:
  /// seeds together with 0, 1 and the midpoints of consecutive members.
  static ValueGrid refine(std::span<const Value> seeds);
  static ValueGrid for_ideal(const FuzzyIdeal& f);
  /// Exactly the given values plus 0 and 1.
  static ValueGrid exact(std::span<const Value> values);

  /// Ascending.
  std::span<const Value> values() const { return values_; }
  /// Descending copy, the order used for chain enumeration.
  std::vector<Value> descending() const { return {values_.rbegin(), values_.rend()}; }

 private:
  std::vector<Value> values_;
};

struct FamilyOptions {
  bool include_constant = true;
  /// Only fuzzy ideals >= lower_bound are visited (pruned during the search).
  const FuzzyIdeal* lower_bound = nullptr;
  /// Applied to every proper level ideal.
  std::function<bool(const Ideal&)> level_filter;
};

/// Visits every fuzzy ideal whose chain ideals come from `ideals` and whose
/// values come from `values`, in a deterministic order (chains extend in
/// list order, values are tried in decreasing order). The visitor returns
/// false to stop early. Returns the number of ideals visited.
std::size_t for_each_fuzzy_ideal(const RingPtr& ring, std::span<const Ideal> ideals,
                                 std::span<const Value> values, const FamilyOptions& options,
                                 const std::function<bool(const FuzzyIdeal&)>& visit);

/// The ideal universe used for grid searches: all ideals of a table ring,
/// or {nZ : 0 <= n <= bound} over Z.
std::vector<Ideal> search_ideals(const Ring& ring, std::uint64_t bound);

}  // namespace fuzzideal
