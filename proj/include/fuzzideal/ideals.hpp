#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fuzzideal/ideal.hpp"
#include "fuzzideal/ring.hpp"

namespace fuzzideal {

/// Integer ideal generators beyond this bound are rejected with
/// ResourceError; primality questions are answered by trial division.
inline constexpr std::uint64_t kMaxIntegerGenerator = 1'000'000'000'000ULL;

Ideal zero_ideal(const Ring& ring);
Ideal whole_ideal(const Ring& ring);

/// Least two-sided ideal containing gens (gcd of |gens| over Z).
Ideal ideal_generate(const Ring& ring, std::span<const Element> gens);
Ideal ideal_generate(const Ring& ring, std::span<const Index> gens);
/// Least ideal containing base and gens.
Ideal ideal_extend(const Ring& ring, const Ideal& base, std::span<const Index> gens);

bool contains(const Ring& ring, const Ideal& ideal, const Element& x);
bool contains(const Ideal& ideal, Index x);
bool is_subset(const Ideal& a, const Ideal& b);
bool is_whole(const Ring& ring, const Ideal& ideal);
Ideal meet(const Ring& ring, const Ideal& a, const Ideal& b);
Ideal join(const Ring& ring, const Ideal& a, const Ideal& b);
/// The ideal product AB (the additive span of all ab).
Ideal ideal_product(const Ring& ring, const Ideal& a, const Ideal& b);

/// Greedy generating set of `ideal` over `base` (base must be contained in
/// it): elements are scanned in canonical order and kept when not already
/// in the ideal generated so far. Table rings only.
std::vector<Index> canonical_generators(const Ring& ring, const Ideal& ideal, const Ideal& base);

/// All two-sided ideals in canonical order: by (cardinality, member mask)
/// for table rings, {nZ : 0 <= n <= bound} for Z (bound required).
std::vector<Ideal> enumerate_ideals(const Ring& ring, std::optional<std::uint64_t> bound = {});

// Crisp primeness oracles. All of them throw DomainError on the whole ring.

/// xRy in P implies x in P or y in P.
bool is_prime_ideal(const Ring& ring, const Ideal& p);
/// xy in P implies x in P or y in P.
bool is_completely_prime_ideal(const Ring& ring, const Ideal& p);
/// xRx in P implies x in P.
bool is_semiprime_ideal(const Ring& ring, const Ideal& p);
/// x^2 in P implies x in P.
bool is_completely_semiprime_ideal(const Ring& ring, const Ideal& p);

/// Intersection of the primes containing I; Rad(R) = R.
Ideal crisp_radical(const Ring& ring, const Ideal& ideal);

/// Primes that contain no smaller prime (table rings).
std::vector<Ideal> minimal_primes(const Ring& ring);

/// A prime M containing the semiprime ideal p and avoiding x, built from the
/// McCoy sequence of x. Throws DomainError if p is not semiprime or x is in p.
Ideal prime_avoiding(const Ring& ring, const Ideal& p, const Element& x);

// Integer helpers (exposed for tests and the radical module).
bool is_prime_number(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
/// Product of the distinct prime factors; radical(0) = 0.
std::uint64_t squarefree_kernel(std::uint64_t n);

}  // namespace fuzzideal
