#include <doctest.h>

#include "support.hpp"

using namespace support;

namespace {

std::vector<oracle::Set> as_sets(const Ring& r, const std::vector<Ideal>& ideals) {
  std::vector<oracle::Set> out;
  for (const auto& i : ideals) out.push_back(oracle::from_ideal(r, i));
  return out;
}

}  // namespace

TEST_CASE("ideal_generate") {
  auto m2 = ring("Mat(2, Zn(2))");
  CHECK(gen(m2, "[[0,1],[0,0]]").members().count() == 16);

  auto z = ring("Z");
  std::vector<Element> g = {Integer(4), Integer(6)};
  CHECK(ideal_generate(*z, std::span<const Element>(g)) == zmul(2));
  CHECK(ideal_generate(*z, std::span<const Element>()) == zmul(0));
  std::vector<Element> neg = {Integer(-9)};
  CHECK(ideal_generate(*z, std::span<const Element>(neg)) == zmul(9));

  auto z12 = ring("Zn(12)");
  CHECK(ideal_generate(*z12, std::span<const Element>()) == zero_ideal(*z12));
}

TEST_CASE("enumerate_ideals matches the subset oracle") {
  for (const auto& spec : small_rings()) {
    CAPTURE(spec);
    auto r = ring(spec);
    auto lib = as_sets(*r, enumerate_ideals(*r));
    auto brute = oracle::subset_ideals(*r);
    std::sort(lib.begin(), lib.end());
    std::sort(brute.begin(), brute.end());
    CHECK(lib == brute);
  }
}

TEST_CASE("enumerate_ideals order and examples") {
  auto z6 = ring("Zn(6)");
  auto ideals = enumerate_ideals(*z6);
  REQUIRE(ideals.size() == 4);
  CHECK(ideals[0] == zero_ideal(*z6));
  CHECK(ideals[1] == gen(z6, "3"));
  CHECK(ideals[2] == gen(z6, "2"));
  CHECK(ideals[3] == whole_ideal(*z6));
  for (std::size_t i = 1; i < ideals.size(); ++i) CHECK(ideals[i - 1] < ideals[i]);

  CHECK(enumerate_ideals(*ring("Mat(2, Zn(2))")).size() == 2);
  CHECK(enumerate_ideals(*ring("Zn(12)")).size() == 6);

  auto z = ring("Z");
  CHECK_THROWS_AS(enumerate_ideals(*z), DomainError);
  auto zi = enumerate_ideals(*z, 10);
  CHECK(zi.size() == 11);
  CHECK(zi.front() == zmul(0));
}

TEST_CASE("crisp primeness predicates match the oracles") {
  for (const auto& spec : small_rings()) {
    CAPTURE(spec);
    auto r = ring(spec);
    auto sets = oracle::subset_ideals(*r);
    for (const auto& i : enumerate_ideals(*r)) {
      if (is_whole(*r, i)) {
        CHECK_THROWS_AS(is_prime_ideal(*r, i), DomainError);
        continue;
      }
      auto s = oracle::from_ideal(*r, i);
      bool p = is_prime_ideal(*r, i);
      CHECK(p == oracle::prime(*r, s));
      CHECK(p == oracle::prime_by_products(*r, sets, s));
      CHECK(is_completely_prime_ideal(*r, i) == oracle::completely_prime(*r, s));
      CHECK(is_semiprime_ideal(*r, i) == oracle::semiprime(*r, s));
      if (is_completely_prime_ideal(*r, i)) CHECK(p);
      if (p) CHECK(is_semiprime_ideal(*r, i));
      if (r->is_commutative()) CHECK(p == is_completely_prime_ideal(*r, i));
    }
  }
}

TEST_CASE("prime and completely prime agree on Zn(n)") {
  for (std::uint64_t n = 2; n <= 24; ++n) {
    auto r = ring("Zn(" + std::to_string(n) + ")");
    for (const auto& i : enumerate_ideals(*r))
      if (!is_whole(*r, i)) CHECK(is_prime_ideal(*r, i) == is_completely_prime_ideal(*r, i));
  }
}

TEST_CASE("ideal products against the ideal-product oracle on rings up to 16 elements") {
  for (const auto* spec : {"Mat(2, Zn(2))", "Tri(2, Zn(2))", "Zn(16)", "Prod(Zn(2), Zn(8))"}) {
    CAPTURE(spec);
    auto r = ring(spec);
    auto sets = oracle::subset_ideals(*r);
    for (const auto& i : enumerate_ideals(*r))
      if (!is_whole(*r, i))
        CHECK(is_prime_ideal(*r, i) == oracle::prime_by_products(*r, sets, oracle::from_ideal(*r, i)));
  }
}

TEST_CASE("crisp predicates: documented examples") {
  auto m2 = ring("Mat(2, Zn(2))");
  CHECK(is_prime_ideal(*m2, zero_ideal(*m2)));
  CHECK_FALSE(is_completely_prime_ideal(*m2, zero_ideal(*m2)));
  CHECK(is_semiprime_ideal(*m2, zero_ideal(*m2)));

  auto z12 = ring("Zn(12)");
  CHECK_FALSE(is_prime_ideal(*z12, gen(z12, "4")));
  CHECK_FALSE(is_semiprime_ideal(*z12, gen(z12, "4")));

  auto z6 = ring("Zn(6)");
  CHECK(is_completely_prime_ideal(*z6, gen(z6, "2")));
  CHECK(is_semiprime_ideal(*z6, zero_ideal(*z6)));

  auto z = ring("Z");
  CHECK(is_prime_ideal(*z, zmul(7)));
  CHECK(is_prime_ideal(*z, zmul(0)));
  CHECK(is_completely_prime_ideal(*z, zmul(0)));
  CHECK_FALSE(is_prime_ideal(*z, zmul(12)));
  CHECK(is_semiprime_ideal(*z, zmul(30)));
  CHECK_FALSE(is_semiprime_ideal(*z, zmul(12)));
  CHECK_THROWS_AS(is_prime_ideal(*z, zmul(1)), DomainError);
}

TEST_CASE("crisp_radical") {
  auto z = ring("Z");
  CHECK(crisp_radical(*z, zmul(12)) == zmul(6));
  CHECK(crisp_radical(*z, zmul(0)) == zmul(0));
  CHECK(crisp_radical(*z, zmul(1)) == zmul(1));
  auto z12 = ring("Zn(12)");
  CHECK(crisp_radical(*z12, gen(z12, "4")) == gen(z12, "2"));
  auto m2 = ring("Mat(2, Zn(2))");
  CHECK(crisp_radical(*m2, zero_ideal(*m2)) == zero_ideal(*m2));
  CHECK(crisp_radical(*m2, whole_ideal(*m2)) == whole_ideal(*m2));

  // Rad(I) is the least semiprime ideal above I.
  for (const auto& spec : small_rings()) {
    CAPTURE(spec);
    auto r = ring(spec);
    auto sets = oracle::subset_ideals(*r);
    auto ideals = enumerate_ideals(*r);
    for (const auto& i : ideals) {
      auto rad = crisp_radical(*r, i);
      CHECK(oracle::from_ideal(*r, rad) == oracle::radical(*r, sets, oracle::from_ideal(*r, i)));
      if (is_whole(*r, rad)) continue;
      CHECK(is_semiprime_ideal(*r, rad));
      for (const auto& j : ideals)
        if (is_subset(i, j) && !is_whole(*r, j) && is_semiprime_ideal(*r, j)) CHECK(is_subset(rad, j));
    }
  }
}

TEST_CASE("minimal_primes") {
  auto z6 = ring("Zn(6)");
  auto m = minimal_primes(*z6);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == gen(z6, "3"));
  CHECK(m[1] == gen(z6, "2"));
  auto m2 = ring("Mat(2, Zn(2))");
  CHECK(minimal_primes(*m2) == std::vector<Ideal>{zero_ideal(*m2)});
  auto z4 = ring("Zn(4)");
  CHECK(minimal_primes(*z4) == std::vector<Ideal>{gen(z4, "2")});
  CHECK(minimal_primes(*ring("Zn(12)")).size() == 2);
}

TEST_CASE("prime_avoiding") {
  auto z6 = ring("Zn(6)");
  CHECK(prime_avoiding(*z6, zero_ideal(*z6), Element(Index{2})) == gen(z6, "3"));
  auto z = ring("Z");
  CHECK(prime_avoiding(*z, zmul(6), Element(Integer(4))) == zmul(3));
  CHECK(prime_avoiding(*z, zmul(0), Element(Integer(6))) == zmul(5));
  auto m2 = ring("Mat(2, Zn(2))");
  CHECK(prime_avoiding(*m2, zero_ideal(*m2), parse_element(*m2, "[[0,1],[0,0]]")) == zero_ideal(*m2));
  CHECK_THROWS_AS(prime_avoiding(*z, zmul(4), Element(Integer(1))), DomainError);
  CHECK_THROWS_AS(prime_avoiding(*z, zmul(6), Element(Integer(12))), DomainError);

  // Postcondition over every semiprime ideal and excluded element.
  for (const auto& spec : small_rings()) {
    CAPTURE(spec);
    auto r = ring(spec);
    for (const auto& p : enumerate_ideals(*r)) {
      if (is_whole(*r, p) || !is_semiprime_ideal(*r, p)) continue;
      for (Index x = 0; x < r->size(); ++x) {
        if (contains(p, x)) continue;
        auto mm = prime_avoiding(*r, p, Element(x));
        CHECK(is_prime_ideal(*r, mm));
        CHECK(is_subset(p, mm));
        CHECK_FALSE(contains(mm, x));
      }
    }
  }
}

TEST_CASE("integer ideals respect the generator limit") {
  auto z = ring("Z");
  std::vector<Element> big = {Integer("10000000000000")};
  CHECK_THROWS_AS(ideal_generate(*z, std::span<const Element>(big)), ResourceError);
  CHECK(meet(*z, zmul(4), zmul(6)) == zmul(12));
  CHECK(join(*z, zmul(4), zmul(6)) == zmul(2));
  CHECK(ideal_product(*z, zmul(4), zmul(6)) == zmul(24));
  CHECK(squarefree_kernel(360) == 30);
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK(is_prime_number(97));
}
