#include "fuzzideal/radical.hpp"

#include <algorithm>

#include "fuzzideal/ideals.hpp"
#include "fuzzideal/primeness.hpp"

namespace fuzzideal {

namespace {

void require_nonconstant(const FuzzyIdeal& i) {
  if (i.is_constant()) throw ConstantIdealError("the fuzzy radical needs a non-constant fuzzy ideal");
}

std::string describe(const Element& x) {
  if (const auto* i = std::get_if<Index>(&x)) return "element #" + std::to_string(*i);
  return "element " + std::get<Integer>(x).str();
}

// Elements at which two fuzzy ideals are compared: all elements of a table
// ring; over Z the generators of both chains and 1 (values are constant on
// the differences of consecutive levels, and each difference contains the
// generator of the smaller level or is reached by 1).
std::vector<Element> probe_elements(const FuzzyIdeal& a, const FuzzyIdeal& b) {
  const Ring& r = a.ring();
  std::vector<Element> out;
  if (r.is_table()) {
    for (Index x = 0; x < r.size(); ++x) out.push_back(x);
    return out;
  }
  std::vector<std::uint64_t> gens = {1};
  for (const auto* f : {&a, &b})
    for (const auto& l : f->chain()) gens.push_back(l.ideal.generator());
  std::ranges::sort(gens);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto g : gens) out.push_back(Integer(g));
  return out;
}

void require_equal(const FuzzyIdeal& a, const FuzzyIdeal& b, const std::string& what) {
  if (a == b) return;
  for (const auto& x : probe_elements(a, b))
    if (a.at(x) != b.at(x))
      throw CheckFailure(what + " differ at " + describe(x) + ": " + a.at(x).str() + " vs " + b.at(x).str());
  throw CheckFailure(what + " differ");
}

struct GridFamily {
  std::vector<FuzzyIdeal> primes;
  std::vector<FuzzyIdeal> semiprimes;
};

GridFamily grid_family_above(const FuzzyIdeal& i, const ValueGrid& grid, std::uint64_t bound) {
  const Ring& r = i.ring();
  auto ideals = search_ideals(r, bound);
  FamilyOptions options;
  options.include_constant = false;
  options.lower_bound = &i;
  // Over Z both notions are decided by the cuts, so non-semiprime levels
  // can be pruned; table rings use the element-wise definitions unpruned.
  if (!r.is_table()) options.level_filter = [&](const Ideal& c) { return is_semiprime_ideal(r, c); };
  GridFamily out;
  for_each_fuzzy_ideal(i.ring_ptr(), ideals, grid.values(), options, [&](const FuzzyIdeal& q) {
    if (is_semiprime_new(q)) {
      out.semiprimes.push_back(q);
      if (is_prime_new(q)) out.primes.push_back(q);
    }
    return true;
  });
  return out;
}

}  // namespace

FuzzyIdeal frad(const FuzzyIdeal& i) {
  require_nonconstant(i);
  std::vector<Level> levels;
  for (const auto& l : i.chain()) levels.push_back({crisp_radical(i.ring(), l.ideal), l.value});
  return normalize_levels(i.ring_ptr(), std::move(levels));
}

RadicalReport radical_report(const FuzzyIdeal& i) {
  RadicalReport report{i, frad(i), false, {}, {}};
  report.fixed_point = report.radical == i;
  const Ring& r = i.ring();
  std::vector<Ideal> radicals;
  for (const auto& l : i.chain()) radicals.push_back(crisp_radical(r, l.ideal));
  std::vector<Element> elements;
  if (r.is_table()) {
    for (Index x = 0; x < r.size(); ++x) elements.push_back(x);
  } else {
    for (const auto& l : report.radical.chain())
      if (l.ideal.generator() != 1) elements.push_back(Integer(l.ideal.generator()));
    elements.push_back(Integer(1));
  }
  for (const auto& x : elements) {
    RadicalTraceEntry entry{x, {}, Value::zero()};
    for (std::size_t j = 0; j < radicals.size(); ++j)
      if (contains(r, radicals[j], x)) entry.levels.push_back(i.chain()[j].value);
    entry.sup = entry.levels.front();
    if (entry.sup != report.radical.at(x)) throw CheckFailure("radical trace disagrees with FRad at " + describe(x));
    report.trace.push_back(std::move(entry));
  }
  return report;
}

FuzzyIdeal witness_prime_excluding(const FuzzyIdeal& i, const Element& x, const Value& s) {
  require_nonconstant(i);
  if (!(s < i.top())) throw DomainError("witness_prime_excluding needs s < I(0)");
  const Ring& r = i.ring();
  Ideal rad = crisp_radical(r, cut(i, s));
  if (contains(r, rad, x)) throw DomainError("the element lies in Rad(I_s)");
  Ideal m = prime_avoiding(r, rad, x);
  return two_valued(i.ring_ptr(), m, i.top(), s);
}

FradCheck frad_intersection_check(const FuzzyIdeal& i, const std::optional<ValueGrid>& grid, std::uint64_t bound) {
  require_nonconstant(i);
  auto g = grid ? *grid : ValueGrid::for_ideal(i);
  auto family = grid_family_above(i, g, bound);
  if (family.primes.empty()) throw CheckFailure("no grid prime fuzzy ideal lies above the input");
  FradCheck out{intersect(family.semiprimes), intersect(family.primes), frad(i), family.semiprimes.size(),
                family.primes.size(), 0};
  require_equal(out.f3, out.f2, "FRad and the intersection of primes");
  require_equal(out.f3, out.f1, "FRad and the intersection of semiprimes");

  for (const auto& x : probe_elements(i, out.f3)) {
    Value f3x = out.f3.at(x);
    for (const auto& s : g.values()) {
      if (!(s > f3x && s < i.top())) continue;
      auto p = witness_prime_excluding(i, x, s);
      if (!is_prime_new(p) || !leq(i, p) || p.at(x) != s)
        throw CheckFailure("exclusion witness at " + describe(x) + " fails its postcondition");
      ++out.exclusion_witnesses;
    }
  }
  return out;
}

InterCheck semiprime_intersection_check(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid,
                                        std::uint64_t bound) {
  if (!is_semiprime_new(p)) throw DomainError("semiprime_intersection_check needs a semiprime fuzzy ideal");
  auto g = grid ? *grid : ValueGrid::for_ideal(p);
  auto primes = grid_family_above(p, g, bound).primes;
  if (primes.empty()) throw CheckFailure("no grid prime fuzzy ideal lies above the input");
  InterCheck out{primes.size(), 0};
  require_equal(p, intersect(primes), "P and the intersection of the primes above it");

  auto check = [&](std::span<const FuzzyIdeal> family) {
    auto meet = intersect(family);
    if (!is_semiprime_new(meet)) throw CheckFailure("an intersection of prime fuzzy ideals is not semiprime");
    ++out.families_checked;
  };
  const std::size_t limit = std::min<std::size_t>(primes.size(), 64);
  for (std::size_t a = 0; a < limit; ++a)
    for (std::size_t b = a + 1; b < limit; ++b) {
      std::array pair = {primes[a], primes[b]};
      check(pair);
    }
  check(primes);
  return out;
}

RadicalProperties radical_properties_check(const FuzzyIdeal& p, const FuzzyIdeal& q) {
  if (!same_ring(p.ring(), q.ring())) throw DomainError("radical_properties_check needs fuzzy ideals of one ring");
  RadicalProperties out;
  auto fp = frad(p), fq = frad(q);
  require_equal(frad(fp), fp, "FRad(FRad(P)) and FRad(P)");
  require_equal(frad(fq), fq, "FRad(FRad(Q)) and FRad(Q)");
  out.idempotent = true;
  if (leq(p, q)) {
    if (!leq(fp, fq)) throw CheckFailure("FRad is not monotone on P <= Q");
    out.monotone = true;
  }
  std::array pq = {p, q}, fpq = {fp, fq};
  require_equal(frad(intersect(pq)), intersect(fpq), "FRad(P ^ Q) and FRad(P) ^ FRad(Q)");
  out.meet_commutes = true;
  for (const auto* f : {&p, &q}) {
    auto ff = frad(*f);
    if (ff.top() != f->top() || ff.bottom() != f->bottom()) throw CheckFailure("FRad changes an endpoint value");
  }
  out.endpoints = true;
  for (const auto* f : {&p, &q}) {
    auto ff = frad(*f);
    for (const auto& l : f->chain().first(f->chain().size() - 1))
      if (cut(ff, l.value) != crisp_radical(f->ring(), l.ideal))
        throw CheckFailure("cut of FRad at " + l.value.str() + " differs from the radical of the cut");
  }
  out.cuts = true;
  return out;
}

bool ring_radical_experimental(const RingPtr& ring) {
  auto rad = frad(zero_type(ring, Value::one(), Value::zero()));
  Ideal s = top_cut(rad);
  // R/{0} is R itself; this is also the only case reachable over Z.
  if (s == zero_ideal(*ring)) return crisp_radical(*ring, s) == s;
  auto q = quotient_ring(ring, s);
  const Ring& qr = *q.ring;
  return crisp_radical(qr, zero_ideal(qr)) == zero_ideal(qr);
}

}  // namespace fuzzideal
