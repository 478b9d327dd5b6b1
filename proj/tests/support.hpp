// Shared helpers for the test suites.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fuzzideal/corpus.hpp"
#include "fuzzideal/dsl.hpp"
#include "fuzzideal/fuzzy.hpp"
#include "fuzzideal/ideals.hpp"
#include "fuzzideal/ring.hpp"
#include "oracles.hpp"

namespace support {

using namespace fuzzideal;

inline RingPtr ring(std::string_view spec) { return build_ring(parse_ring_spec(spec)); }

inline FuzzyIdeal fz(const RingPtr& r, std::string_view text) { return parse_fuzzy_spec(r, text); }

inline Index idx(const RingPtr& r, std::string_view element) {
  return table_index(*r, parse_element(*r, element));
}

inline Ideal gen(const RingPtr& r, std::string_view element) {
  Element e = parse_element(*r, element);
  return ideal_generate(*r, std::span<const Element>(&e, 1));
}

inline Ideal zmul(std::uint64_t n) { return Ideal::multiples(n); }

inline Value v(std::string_view text) { return parse_value(text); }

// Rings of at most eight elements, commutative and not.
inline const std::vector<std::string>& small_rings() {
  static const std::vector<std::string> specs = {
      "Zn(2)", "Zn(3)", "Zn(4)", "Zn(5)", "Zn(6)", "Zn(7)", "Zn(8)", "Prod(Zn(2), Zn(2))",
      "Prod(Zn(2), Zn(3))", "Prod(Zn(2), Zn(4))", "Prod(Zn(2), Zn(2), Zn(2))", "Tri(2, Zn(2))",
      "Quot(Zn(8), <4>)", "Mat(1, Zn(6))"};
  return specs;
}

// The rings whose exhaustive corpora the acceptance checks sweep.
inline const std::vector<std::string>& corpus_rings() {
  static const std::vector<std::string> specs = {"Zn(6)", "Zn(12)", "Mat(2, Zn(2))", "Tri(2, Zn(2))",
                                                 "Prod(Zn(2), Zn(3))"};
  return specs;
}

inline std::vector<FuzzyIdeal> corpus(const RingPtr& r, std::uint64_t bound = 32) {
  CorpusOptions options;
  options.bound = bound;
  return exhaustive_corpus(r, options);
}

}  // namespace support
