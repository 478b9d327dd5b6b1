#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzideal/errors.hpp"
#include "fuzzideal/ideal.hpp"
#include "fuzzideal/ring.hpp"
#include "fuzzideal/value.hpp"

namespace fuzzideal {

/// One step of a cut chain: every element of `ideal` has value >= `value`.
struct Level {
  Ideal ideal;
  Value value;

  friend bool operator==(const Level&, const Level&) = default;
};

/// A finite-valued fuzzy ideal in canonical cut-chain form.
///
/// The chain C_1 < C_2 < ... < C_m = R is strictly increasing, the values
/// v_1 > ... > v_m strictly decreasing, and F(x) = v_j for the least j with
/// x in C_j. Every C_j being an ideal is exactly the fuzzy ideal axiom set,
/// so any constructed FuzzyIdeal is valid.
class FuzzyIdeal {
 public:
  /// Throws InvalidFuzzyIdeal if the chain is empty, not strictly
  /// increasing, does not end at R, has non-decreasing values or contains a
  /// set that is not an ideal.
  FuzzyIdeal(RingPtr ring, std::vector<Level> chain);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const Level> chain() const { return chain_; }

  Value at(const Element& x) const;
  Value at(Index x) const;
  /// F(0), the largest value.
  Value top() const { return chain_.front().value; }
  /// F(1), the smallest value.
  Value bottom() const { return chain_.back().value; }
  bool is_constant() const { return chain_.size() == 1; }
  /// Image values in decreasing order.
  std::vector<Value> image() const;
  /// Value of every element of a table ring.
  std::vector<Value> to_map() const;

  friend bool operator==(const FuzzyIdeal& a, const FuzzyIdeal& b) {
    return same_ring(*a.ring_, *b.ring_) && a.chain_ == b.chain_;
  }

 private:
  RingPtr ring_;
  std::vector<Level> chain_;
};

/// Arbitrary finite-image fuzzy set of a table ring.
struct FuzzySet {
  RingPtr ring;
  std::vector<Value> values;

  Value at(Index x) const { return values.at(x); }
  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    return same_ring(*a.ring, *b.ring) && a.values == b.values;
  }
};

/// Fuzzy point x_t: value t > 0 at x, zero elsewhere.
struct FuzzyPoint {
  Index element = 0;
  Value value;
};

/// A map that fails the fuzzy ideal axioms at (x, y).
class AxiomViolation : public InvalidFuzzyIdeal {
 public:
  AxiomViolation(Index x, Index y, std::string axiom);
  Index x() const { return x_; }
  Index y() const { return y_; }
  const std::string& axiom() const { return axiom_; }

 private:
  Index x_, y_;
  std::string axiom_;
};

/// Validates I(x - y) >= I(x) ^ I(y) and I(xy) >= I(x) v I(y) pointwise and
/// converts to chain form; the two validations are cross-checked.
FuzzyIdeal fuzzy_from_map(const RingPtr& ring, std::span<const Value> assignment);
FuzzyIdeal fuzzy_from_chain(const RingPtr& ring, std::vector<Level> chain);

/// Builds a fuzzy ideal from levels with strictly decreasing values and
/// weakly increasing ideals ending at R, merging equal consecutive ideals
/// into the larger value.
FuzzyIdeal normalize_levels(const RingPtr& ring, std::vector<Level> levels);

/// Two-valued ideal: `high` on `ideal`, `low` elsewhere (constant `high`
/// when the ideal is R).
FuzzyIdeal two_valued(const RingPtr& ring, const Ideal& ideal, Value high, Value low);

/// Zero-type ideal: t at 0, s elsewhere. Throws DomainError unless s < t.
FuzzyIdeal zero_type(const RingPtr& ring, Value t, Value s);

/// The alpha-cut {x : F(x) >= alpha}. Throws DomainError if alpha > F(0).
Ideal cut(const FuzzyIdeal& f, const Value& alpha);
/// F_*, the cut at F(0).
Ideal top_cut(const FuzzyIdeal& f);
/// {x : F(x) > F(1)}; throws ConstantIdealError for constant F.
Ideal strict_support(const FuzzyIdeal& f);

/// Pointwise order I <= J.
bool leq(const FuzzyIdeal& i, const FuzzyIdeal& j);
/// Pointwise minimum. Throws DomainError for an empty family or mixed rings.
FuzzyIdeal intersect(std::span<const FuzzyIdeal> family);
/// Same cut chain ideals (values may differ).
bool value_equivalent(const FuzzyIdeal& i, const FuzzyIdeal& j);

FuzzySet to_set(const FuzzyIdeal& f);
FuzzySet singleton(const RingPtr& ring, FuzzyPoint point);
FuzzySet constant_set(const RingPtr& ring, Value v);

/// (A o B)(x) = max over x = x1 x2 of A(x1) ^ B(x2). Table rings only.
FuzzySet compose(const FuzzySet& a, const FuzzySet& b);
/// Least fuzzy ideal above F. Table rings only.
FuzzyIdeal generate(const FuzzySet& f);
/// IJ = <I o J>. Table rings only.
FuzzyIdeal fuzzy_product(const FuzzyIdeal& i, const FuzzyIdeal& j);

/// Pointwise order of fuzzy sets.
bool leq(const FuzzySet& a, const FuzzySet& b);
bool leq(const FuzzySet& a, const FuzzyIdeal& b);

}  // namespace fuzzideal
