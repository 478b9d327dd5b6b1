// Acceptance checks: one PASS/FAIL line per criterion, exact equality throughout.
#include <functional>
#include <iostream>
#include <sstream>

#include "fuzzideal/grid.hpp"
#include "fuzzideal/primeness.hpp"
#include "fuzzideal/radical.hpp"
#include "support.hpp"

using namespace support;

namespace {

// Thrown by expect() with a description of the first failing check.
struct Miss {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Miss{what};
}

struct Corpus {
  std::string spec;
  RingPtr ring;
  std::vector<FuzzyIdeal> items;
};

const std::vector<Corpus>& corpora() {
  static const std::vector<Corpus> all = [] {
    std::vector<Corpus> out;
    for (const auto& s : corpus_rings()) {
      auto r = ring(s);
      out.push_back({s, r, exhaustive_corpus(r)});
    }
    auto z = ring("Z");
    out.push_back({"Z", z, exhaustive_corpus(z)});
    return out;
  }();
  return all;
}

std::string where(const Corpus& c, const FuzzyIdeal& f) { return c.spec + " " + format(f); }

const FuzzyIdeal& even_ideal() {
  static const FuzzyIdeal f = fz(ring("Z"), "{1: <0>, 4/5: <2>, 3/5: <*>}");
  return f;
}

const FuzzyIdeal& four_ideal() {
  static const FuzzyIdeal f = fz(ring("Z"), "{1: <0>, 4/5: <4>, 3/5: <*>}");
  return f;
}

RingPtr mat2() {
  static const RingPtr r = ring("Mat(2, Zn(2))");
  return r;
}

FuzzyIdeal chi0() { return zero_type(mat2(), Value(1), Value(0)); }

std::string c1() {
  auto m = mat2();
  auto zero = zero_ideal(*m);
  expect(is_prime_ideal(*m, zero), "{0} is not prime");
  expect(!is_completely_prime_ideal(*m, zero), "{0} is completely prime");
  Element e12 = parse_element(*m, "[[0,1],[0,0]]");
  Element sq = ring_arithmetic(*m, RingOp::Mul, e12, e12);
  expect(!contains(*m, zero, e12) && contains(*m, zero, sq), "E12 is not a witness");
  return "witness E12*E12 = " + format_element(*m, sq) + " with E12 = " + format_element(*m, e12);
}

std::string c2() {
  auto p = chi0();
  auto report = classify(p);
  auto n = report.notions;
  expect(n[Notion::PrimeNew] && n[Notion::D2] && n[Notion::D1], "PRIME_NEW, D2 or D1 false");
  expect(!n[Notion::D4], "D4 true");
  return "PRIME_NEW = D2 = D1 = true, D4 = false";
}

std::string c3() {
  auto p = zero_type(mat2(), v("1/2"), Value(0));
  expect(is_D2(p), "D2 false");
  expect(!is_D1(p), "D1 true");
  return "D2 = true, D1 = false";
}

std::string c4() {
  expect(is_D2(even_ideal()) && !is_D1(even_ideal()), "three-valued ideal split wrong");
  expect(is_D3(four_ideal()) && !is_D2(four_ideal()), "<4> variant split wrong");
  return "D2 and not D1; D3 and not D2";
}

std::string c5() {
  auto m = mat2();
  Index e12 = idx(m, "[[0,1],[0,0]]");
  auto x1 = singleton(m, {e12, Value(1)});
  auto p = chi0();
  expect(compose(x1, x1) == to_set(p), "x1 o x1 differs from chi_{0}");
  auto g = generate(x1);
  expect(g.is_constant() && g.top() == Value(1), "<x1> differs from chi_R");
  // (E12, E12, 1, 1): the product point sits below P while neither point does.
  expect(min(Value(1), Value(1)) <= p.at(m->mul(e12, e12)) && Value(1) > p.at(e12), "E12 does not violate D0");
  auto report = classify(p);
  expect(!report.notions.at(Notion::D0), "D0 true");
  expect(report.notions.at(Notion::D1) && report.notions.at(Notion::D0Prime), "D1 or D0' false");
  return "x1 o x1 = chi_{0}, <x1> = chi_R, D0 false, D1 true";
}

std::string c6() {
  std::size_t n = 0;
  for (const auto& c : corpora()) {
    if (!c.ring->is_table()) continue;
    for (const auto& p : c.items) {
      auto r = charprime_equivalence_check(p);
      if (c.ring->is_commutative()) expect(r.d4 == r.prime_new, "D4 disagrees at " + where(c, p));
      ++n;
    }
  }
  return std::to_string(n) + " fuzzy ideals, four-way agreement";
}

std::string c7() {
  std::size_t n = 0;
  for (const auto& c : corpora()) {
    for (const auto& p : c.items) {
      bool d4 = is_D4(p);
      if (d4) expect(is_D2(p), "D4 without D2 at " + where(c, p));
      expect(d4 == completely_prime_cuts(p), "cut characterization fails at " + where(c, p));
      ++n;
    }
    auto report = diagram_check(c.items);
    expect(report.violations().empty(), "diagram violation on " + c.spec + ": " +
                                            (report.violations().empty() ? "" : report.violations()[0]->edge));
  }
  return std::to_string(n) + " fuzzy ideals, zero violations";
}

std::string c8() {
  std::size_t semiprimes = 0, families = 0;
  for (const auto& c : corpora())
    for (const auto& p : c.items) {
      if (!is_semiprime_new(p)) continue;
      auto r = semiprime_intersection_check(p);
      ++semiprimes;
      families += r.families_checked;
    }
  return std::to_string(semiprimes) + " semiprime ideals, " + std::to_string(families) + " prime families";
}

std::string c9() {
  std::size_t n = 0;
  for (const auto& c : corpora())
    for (const auto& p : c.items) {
      auto check = frad_intersection_check(p);
      expect(check.f1 == check.f3 && check.f2 == check.f3, "F1, F2, F3 differ at " + where(c, p));
      const auto& f = check.f3;
      expect(f.top() == p.top() && f.bottom() == p.bottom(), "endpoint moved at " + where(c, p));
      for (const auto& t : p.image())
        expect(cut(f, t) == crisp_radical(*c.ring, cut(p, t)), "cut equality fails at " + where(c, p));
      ++n;
    }
  return std::to_string(n) + " fuzzy ideals, F3 = F2 = F1";
}

std::string c10() {
  std::size_t pairs = 0;
  for (const auto& c : corpora())
    for (const auto& [a, b] : corpus_pairs(c.items.size(), kDefaultPairCap, 1)) {
      auto r = radical_properties_check(c.items[a], c.items[b]);
      expect(r.idempotent && r.meet_commutes && r.endpoints && r.cuts && r.monotone.value_or(true),
             "property fails at " + where(c, c.items[a]) + " / " + format(c.items[b]));
      ++pairs;
    }
  return std::to_string(pairs) + " pairs";
}

std::string c11() {
  auto f = frad(four_ideal());
  expect(f == even_ideal(), "FRad = " + format(f));
  return "FRad = " + format(f);
}

std::string c12() {
  std::size_t n = 0;
  for (const auto& c : corpora())
    for (const auto& q : c.items) {
      if (!is_prime_new(q)) continue;
      auto m = minimal_prime_below(q);
      expect(is_prime_new(m) && leq(m, q), "not a prime below at " + where(c, q));
      std::vector<Ideal> minimal =
          c.ring->is_table() ? minimal_primes(*c.ring) : std::vector<Ideal>{Ideal::multiples(0)};
      bool matched = false;
      for (const auto& pm : minimal)
        matched = matched || value_equivalent(m, two_valued(c.ring, pm, Value(1), Value(0)));
      expect(matched, "no minimal prime matches at " + where(c, q));
      ++n;
    }
  auto classes = count_minimal_prime_classes(*ring("Zn(6)"));
  expect(classes == 2, "Zn(6) has " + std::to_string(classes) + " classes");
  return std::to_string(n) + " prime fuzzy ideals; Zn(6) has 2 classes";
}

std::string c13() {
  std::size_t n = 0;
  for (const auto& c : corpora()) {
    if (!c.ring->is_table()) continue;
    for (const auto& p : c.items)
      if (is_prime_new(p)) {
        expect(p.image().size() == 2, "not two-valued: " + where(c, p));
        ++n;
      }
  }
  return std::to_string(n) + " prime fuzzy ideals, all two-valued";
}

std::string c14() {
  std::size_t products = 0;
  for (const auto& spec : small_rings()) {
    auto r = ring(spec);
    auto sets = oracle::subset_ideals(*r);
    std::sort(sets.begin(), sets.end());
    std::vector<oracle::Set> lib;
    for (const auto& i : enumerate_ideals(*r)) lib.push_back(oracle::from_ideal(*r, i));
    std::sort(lib.begin(), lib.end());
    expect(lib == sets, "ideal enumeration differs on " + spec);
    auto items = exhaustive_corpus(r);
    for (const auto& i : items)
      for (const auto& j : items) {
        auto brute = oracle::sum_of_products(*r, i.to_map(), j.to_map());
        expect(fuzzy_product(i, j).to_map() == brute, "product differs on " + spec);
        expect(generate(compose(to_set(i), to_set(j))).to_map() == brute, "<I o J> differs on " + spec);
        ++products;
      }
  }
  return std::to_string(small_rings().size()) + " rings, " + std::to_string(products) + " products";
}

std::string c15() {
  std::size_t n = 0;
  for (const auto& c : corpora())
    for (const auto& f : c.items) {
      auto text = format(f);
      auto back = parse_fuzzy_spec(c.ring, text);
      expect(back == f && format(back) == text, "round trip fails: " + where(c, f));
      ++n;
    }
  struct Fixture {
    std::string ring, fuzzy;
    std::size_t start, end;
  };
  const std::vector<Fixture> fixtures = {
      {"Zn(1)", "", 3, 4},           {"Zn(6", "", 4, 4},
      {"Foo(2)", "", 0, 3},          {"Zn(6) x", "", 6, 7},
      {"Mat(0, Zn(2))", "", 4, 5},   {"Zn(6)", "{1: <0>, 1/2: <*>", 17, 17},
      {"Zn(6)", "{2: <*>}", 1, 2},   {"Zn(6)", "{1/0: <*>}", 1, 4},
      {"Zn(6)", "{1 <*>}", 3, 4},    {"Zn(6)", "{1: <*>} tail", 9, 13},
  };
  for (const auto& f : fixtures) {
    bool raised = false;
    try {
      auto r = ring(f.ring);
      parse_fuzzy_spec(r, f.fuzzy);
    } catch (const ParseError& e) {
      raised = true;
      expect(e.span().start == f.start && e.span().end == f.end,
             "span of '" + (f.fuzzy.empty() ? f.ring : f.fuzzy) + "' is " + std::to_string(e.span().start) + ".." +
                 std::to_string(e.span().end));
    }
    expect(raised, "no ParseError for '" + (f.fuzzy.empty() ? f.ring : f.fuzzy) + "'");
  }
  return std::to_string(n) + " serializations, " + std::to_string(fixtures.size()) + " fixtures";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"zero ideal of Mat(2, Zn(2)) prime, not completely prime", c1},
      {"chi_{0} on Mat(2, Zn(2)) separates PRIME_NEW from D4", c2},
      {"zero-type 1/2, 0 on Mat(2, Zn(2)) separates D2 from D1", c3},
      {"three-valued ideals over Z", c4},
      {"D0 fails while D1 holds for chi_{0}", c5},
      {"prime characterizations agree on the table corpora", c6},
      {"D4 implies D2 and matches completely prime cuts", c7},
      {"semiprime ideals are intersections of primes", c8},
      {"three descriptions of the fuzzy radical agree", c9},
      {"radical properties over corpus pairs", c10},
      {"FRad of the <4> variant over Z", c11},
      {"minimal prime fuzzy ideals", c12},
      {"prime fuzzy ideals of finite rings are two-valued", c13},
      {"product and ideal enumeration oracles", c14},
      {"parser round trip and error spans", c15},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string status = "PASS", detail;
    try {
      detail = criteria[k].second();
    } catch (const Miss& m) {
      status = "FAIL";
      detail = m.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
    }
    if (status == "FAIL") ++failures;
    std::cout << "criterion " << (k + 1) << ": " << status << "  " << criteria[k].first << " (" << detail << ")\n";
  }
  return failures == 0 ? 0 : 1;
}
