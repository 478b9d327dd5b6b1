#include "fuzzideal/ideals.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "detail.hpp"
#include "fuzzideal/errors.hpp"

namespace fuzzideal {

namespace {

std::uint64_t to_generator(const Integer& v) {
  Integer a = v < 0 ? Integer(-v) : v;
  if (a > kMaxIntegerGenerator) throw ResourceError("integer ideal generator exceeds 10^12");
  return static_cast<std::uint64_t>(a);
}

// Closes `set` (already an ideal, listed in `members`) under the pending
// elements. Only the products of newly adjoined additive generators with the
// additive generators of R need to be revisited.
Ideal close(const Ring& r, ElementSet set, std::vector<Index> members, std::vector<Index> pending) {
  while (!pending.empty()) {
    Index g = pending.back();
    pending.pop_back();
    if (set.contains(g)) continue;
    detail::extend_subgroup(r, set, members, g);
    for (Index a : r.additive_generators()) {
      pending.push_back(r.mul(a, g));
      pending.push_back(r.mul(g, a));
    }
  }
  return Ideal(std::move(set));
}

// Greedy additive generating set of a subgroup.
std::vector<Index> additive_basis(const Ring& r, const ElementSet& subgroup) {
  ElementSet span(r.size());
  span.insert(r.zero());
  std::vector<Index> members{r.zero()};
  std::vector<Index> basis;
  for (Index x : subgroup.members()) {
    if (span.contains(x)) continue;
    basis.push_back(x);
    detail::extend_subgroup(r, span, members, x);
  }
  return basis;
}

void require_proper(const Ring& r, const Ideal& p) {
  if (is_whole(r, p)) throw DomainError("primeness is only defined for proper ideals");
}

}  // namespace

Ideal zero_ideal(const Ring& ring) {
  if (!ring.is_table()) return Ideal::multiples(0);
  ElementSet s(ring.size());
  s.insert(ring.zero());
  return Ideal(std::move(s));
}

Ideal whole_ideal(const Ring& ring) {
  if (!ring.is_table()) return Ideal::multiples(1);
  return Ideal(ElementSet::full(ring.size()));
}

Ideal ideal_generate(const Ring& ring, std::span<const Element> gens) {
  if (!ring.is_table()) {
    Integer g = 0;
    for (const auto& e : gens) g = boost::multiprecision::gcd(g, integer_value(ring, e));
    return Ideal::multiples(to_generator(g));
  }
  std::vector<Index> idx;
  for (const auto& e : gens) idx.push_back(table_index(ring, e));
  return ideal_generate(ring, idx);
}

Ideal ideal_generate(const Ring& ring, std::span<const Index> gens) {
  return ideal_extend(ring, zero_ideal(ring), gens);
}

Ideal ideal_extend(const Ring& ring, const Ideal& base, std::span<const Index> gens) {
  if (!ring.is_table()) {
    std::uint64_t g = base.generator();
    for (Index x : gens) g = std::gcd(g, std::uint64_t{x});
    return Ideal::multiples(g);
  }
  for (Index x : gens)
    if (x >= ring.size()) throw DomainError("element index out of range");
  return close(ring, base.members(), base.members().members(), {gens.begin(), gens.end()});
}

bool contains(const Ring& ring, const Ideal& ideal, const Element& x) {
  if (ring.is_table()) return ideal.members().contains(table_index(ring, x));
  const Integer& v = integer_value(ring, x);
  if (ideal.generator() == 0) return v == 0;
  return v % ideal.generator() == 0;
}

bool contains(const Ideal& ideal, Index x) { return ideal.members().contains(x); }

bool is_subset(const Ideal& a, const Ideal& b) {
  if (a.is_table()) return a.members().is_subset_of(b.members());
  if (b.generator() == 0) return a.generator() == 0;
  return a.generator() % b.generator() == 0;
}

bool is_whole(const Ring& ring, const Ideal& ideal) {
  if (!ring.is_table()) return ideal.generator() == 1;
  return ideal.members().contains(ring.one());
}

Ideal meet(const Ring& ring, const Ideal& a, const Ideal& b) {
  if (ring.is_table()) return Ideal(a.members() & b.members());
  std::uint64_t l = std::lcm(a.generator(), b.generator());
  if (l > kMaxIntegerGenerator) throw ResourceError("integer ideal generator exceeds 10^12");
  return Ideal::multiples(l);
}

Ideal join(const Ring& ring, const Ideal& a, const Ideal& b) {
  if (!ring.is_table()) return Ideal::multiples(std::gcd(a.generator(), b.generator()));
  if (a.members().is_subset_of(b.members())) return b;
  if (b.members().is_subset_of(a.members())) return a;
  return ideal_extend(ring, a, additive_basis(ring, b.members()));
}

Ideal ideal_product(const Ring& ring, const Ideal& a, const Ideal& b) {
  if (!ring.is_table()) {
    Integer p = Integer(a.generator()) * b.generator();
    return Ideal::multiples(to_generator(p));
  }
  std::vector<Index> products;
  for (Index x : additive_basis(ring, a.members()))
    for (Index y : additive_basis(ring, b.members())) products.push_back(ring.mul(x, y));
  return ideal_generate(ring, products);
}

std::vector<Index> canonical_generators(const Ring& ring, const Ideal& ideal, const Ideal& base) {
  if (!ring.is_table()) throw BackendError("canonical_generators needs a table ring");
  std::vector<Index> gens;
  Ideal current = base;
  for (Index x : ideal.members().members()) {
    if (current.members().contains(x)) continue;
    gens.push_back(x);
    current = ideal_extend(ring, current, std::span<const Index>(&x, 1));
  }
  return gens;
}

std::vector<Ideal> enumerate_ideals(const Ring& ring, std::optional<std::uint64_t> bound) {
  if (!ring.is_table()) {
    if (!bound) throw DomainError("enumerating ideals of Z needs a generator bound");
    std::vector<Ideal> out;
    for (std::uint64_t n = 0; n <= *bound; ++n) out.push_back(Ideal::multiples(n));
    return out;
  }
  // Every ideal is a join of principal ideals, so closing {0} under joins
  // with principal ideals reaches the whole lattice.
  std::vector<std::pair<Index, Ideal>> principals;
  {
    std::unordered_set<Ideal, IdealHash> seen;
    for (Index x = 0; x < ring.size(); ++x) {
      Ideal p = ideal_generate(ring, std::span<const Index>(&x, 1));
      if (seen.insert(p).second) principals.emplace_back(x, std::move(p));
    }
  }
  std::unordered_set<Ideal, IdealHash> found{zero_ideal(ring)};
  std::deque<Ideal> queue{zero_ideal(ring)};
  while (!queue.empty()) {
    Ideal current = std::move(queue.front());
    queue.pop_front();
    for (const auto& [gen, p] : principals) {
      if (p.members().is_subset_of(current.members())) continue;
      Ideal next = ideal_extend(ring, current, std::span<const Index>(&gen, 1));
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Ideal> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime_ideal(const Ring& ring, const Ideal& p) {
  require_proper(ring, p);
  if (!ring.is_table()) return p.generator() == 0 || is_prime_number(p.generator());
  const auto& in = p.members();
  const auto n = static_cast<Index>(ring.size());
  std::vector<Index> outside;
  for (Index x = 0; x < n; ++x)
    if (!in.contains(x)) outside.push_back(x);
  std::vector<Index> row(n);
  for (Index x : outside) {
    for (Index r = 0; r < n; ++r) row[r] = ring.mul(x, r);
    for (Index y : outside) {
      bool escapes = false;
      for (Index r = 0; r < n && !escapes; ++r) escapes = !in.contains(ring.mul(row[r], y));
      if (!escapes) return false;
    }
  }
  return true;
}

bool is_completely_prime_ideal(const Ring& ring, const Ideal& p) {
  require_proper(ring, p);
  if (!ring.is_table()) return is_prime_ideal(ring, p);
  const auto& in = p.members();
  for (Index x = 0; x < ring.size(); ++x) {
    if (in.contains(x)) continue;
    for (Index y = 0; y < ring.size(); ++y)
      if (!in.contains(y) && in.contains(ring.mul(x, y))) return false;
  }
  return true;
}

bool is_semiprime_ideal(const Ring& ring, const Ideal& p) {
  require_proper(ring, p);
  if (!ring.is_table()) return p.generator() == 0 || is_squarefree(p.generator());
  const auto& in = p.members();
  for (Index x = 0; x < ring.size(); ++x) {
    if (in.contains(x)) continue;
    bool escapes = false;
    for (Index r = 0; r < ring.size() && !escapes; ++r) escapes = !in.contains(ring.mul(ring.mul(x, r), x));
    if (!escapes) return false;
  }
  return true;
}

bool is_completely_semiprime_ideal(const Ring& ring, const Ideal& p) {
  require_proper(ring, p);
  if (!ring.is_table()) return is_semiprime_ideal(ring, p);
  const auto& in = p.members();
  for (Index x = 0; x < ring.size(); ++x)
    if (!in.contains(x) && in.contains(ring.mul(x, x))) return false;
  return true;
}

Ideal crisp_radical(const Ring& ring, const Ideal& ideal) {
  if (is_whole(ring, ideal)) return ideal;
  if (!ring.is_table()) return Ideal::multiples(squarefree_kernel(ideal.generator()));
  Ideal result = whole_ideal(ring);
  for (const auto& q : ring.ideals()) {
    if (is_whole(ring, q) || !is_subset(ideal, q)) continue;
    if (is_prime_ideal(ring, q)) result = meet(ring, result, q);
  }
  return result;
}

std::vector<Ideal> minimal_primes(const Ring& ring) {
  if (!ring.is_table()) throw BackendError("minimal_primes needs a table ring");
  std::vector<Ideal> primes;
  for (const auto& q : ring.ideals())
    if (!is_whole(ring, q) && is_prime_ideal(ring, q)) primes.push_back(q);
  std::vector<Ideal> minimal;
  for (const auto& p : primes) {
    bool is_min = std::none_of(primes.begin(), primes.end(),
                               [&](const Ideal& q) { return q != p && is_subset(q, p); });
    if (!is_min) continue;
    // Finite prime rings are simple, so every prime must also be maximal.
    for (const auto& q : ring.ideals())
      if (q != p && is_subset(p, q) && !is_whole(ring, q))
        throw CheckFailure("prime ideal of a finite ring is not maximal");
    minimal.push_back(p);
  }
  return minimal;
}

Ideal prime_avoiding(const Ring& ring, const Ideal& p, const Element& x) {
  if (!is_semiprime_ideal(ring, p)) throw DomainError("prime_avoiding needs a semiprime ideal");
  if (contains(ring, p, x)) throw DomainError("prime_avoiding needs an element outside the ideal");

  if (!ring.is_table()) {
    const Integer& v = integer_value(ring, x);
    const std::uint64_t n = p.generator();
    if (n > 0) {
      std::uint64_t rest = n;
      for (std::uint64_t q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        if (v % q != 0) return Ideal::multiples(q);
        while (rest % q == 0) rest /= q;
      }
      if (rest > 1 && v % rest != 0) return Ideal::multiples(rest);
    } else {
      for (std::uint64_t q = 2;; ++q)
        if (is_prime_number(q) && v % q != 0) return Ideal::multiples(q);
    }
    throw CheckFailure("no prime avoids the element");
  }

  // McCoy sequence x_{i+1} = x_i r_i x_i, r_i the first element keeping it
  // outside p. The sequence is deterministic, so it cycles once it repeats.
  const auto& in = p.members();
  ElementSet sequence(ring.size());
  Index current = table_index(ring, x);
  sequence.insert(current);
  for (;;) {
    std::optional<Index> next;
    for (Index r = 0; r < ring.size() && !next; ++r) {
      Index y = ring.mul(ring.mul(current, r), current);
      if (!in.contains(y)) next = y;
    }
    if (!next) throw CheckFailure("semiprime ideal admits no McCoy step");
    if (sequence.contains(*next)) break;
    sequence.insert(*next);
    current = *next;
  }

  // A single pass suffices: ideals are closed under joins, so any ideal
  // disjoint from the sequence that contains the final M was absorbed when
  // it was visited.
  Ideal m = p;
  for (const auto& j : ring.ideals()) {
    Ideal candidate = join(ring, m, j);
    if (!candidate.members().intersects(sequence)) m = std::move(candidate);
  }
  if (!is_prime_ideal(ring, m)) throw CheckFailure("McCoy construction did not yield a prime");
  return m;
}

bool is_prime_number(std::uint64_t n) {
  if (n > kMaxIntegerGenerator) throw ResourceError("integer exceeds 10^12");
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  return squarefree_kernel(n) == n;
}

std::uint64_t squarefree_kernel(std::uint64_t n) {
  if (n > kMaxIntegerGenerator) throw ResourceError("integer exceeds 10^12");
  if (n == 0) return 0;
  std::uint64_t kernel = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    kernel *= d;
    while (n % d == 0) n /= d;
  }
  return kernel * n;
}

}  // namespace fuzzideal
