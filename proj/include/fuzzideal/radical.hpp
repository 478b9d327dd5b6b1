#pragma once

#include <cstdint>
#include <vector>

#include "fuzzideal/fuzzy.hpp"
#include "fuzzideal/grid.hpp"

namespace fuzzideal {

/// FRad(I)(x) = max{v_j : x in Rad(C_j)} over the chain levels of I, as a
/// canonical chain. Throws ConstantIdealError for constant I.
FuzzyIdeal frad(const FuzzyIdeal& i);

struct RadicalTraceEntry {
  Element element;
  std::vector<Value> levels;  // image values t with x in Rad(I_t), decreasing
  Value sup;
};

struct RadicalReport {
  FuzzyIdeal input;
  FuzzyIdeal radical;
  bool fixed_point = false;
  /// Every element of a table ring; over Z one generator per radical level
  /// plus 1.
  std::vector<RadicalTraceEntry> trace;
  std::vector<FuzzyIdeal> witnesses;
};

RadicalReport radical_report(const FuzzyIdeal& i);

/// Two-valued I(0) on M = prime_avoiding(Rad(I_s), x), s elsewhere: a prime
/// fuzzy ideal above I taking the value s at x. Throws DomainError unless
/// s < I(0) and x is outside Rad(I_s).
FuzzyIdeal witness_prime_excluding(const FuzzyIdeal& i, const Element& x, const Value& s);

struct FradCheck {
  FuzzyIdeal f1;  // intersection of grid semiprime fuzzy ideals above I
  FuzzyIdeal f2;  // intersection of grid prime fuzzy ideals above I
  FuzzyIdeal f3;  // frad(I)
  std::size_t semiprimes = 0;
  std::size_t primes = 0;
  std::size_t exclusion_witnesses = 0;
};

/// Verifies F1 = F2 = F3 over the grid family (ideals of a table ring, or
/// nZ with n <= bound over Z) and checks a witness_prime_excluding ideal for
/// every element and grid value s with F3(x) < s < I(0). Throws CheckFailure
/// naming the divergent element.
FradCheck frad_intersection_check(const FuzzyIdeal& i, const std::optional<ValueGrid>& grid = {},
                                  std::uint64_t bound = 64);

struct InterCheck {
  std::size_t primes = 0;
  std::size_t families_checked = 0;
};

/// P equals the intersection of the grid prime fuzzy ideals above it, and
/// intersections of those primes (all pairs and the whole family) are
/// semiprime. Throws DomainError unless P is semiprime, CheckFailure on a
/// failed assertion.
InterCheck semiprime_intersection_check(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid = {},
                                        std::uint64_t bound = 64);

struct RadicalProperties {
  bool idempotent = false;
  std::optional<bool> monotone;  // only evaluated when P <= Q
  bool meet_commutes = false;
  bool endpoints = false;
  bool cuts = false;
};

/// Idempotence, monotonicity, FRad(P ^ Q) = FRad(P) ^ FRad(Q), endpoint
/// values and (FRad P)_t = Rad(P_t). Throws CheckFailure if one fails.
RadicalProperties radical_properties_check(const FuzzyIdeal& p, const FuzzyIdeal& q);

/// Experimental reading of "Rad(R / FRad(R)) = 0": with S = Rad({0}) (the
/// top cut of FRad of the zero-type ideal), the quotient R/S has zero prime
/// radical.
bool ring_radical_experimental(const RingPtr& ring);

}  // namespace fuzzideal
