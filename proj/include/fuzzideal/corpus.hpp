#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fuzzideal/fuzzy.hpp"

namespace fuzzideal {

inline constexpr std::size_t kDefaultCorpusCap = 100'000;
inline constexpr std::uint64_t kDefaultIntegerBound = 64;

std::vector<Value> default_palette();

struct CorpusOptions {
  std::vector<Value> palette = default_palette();
  std::uint64_t bound = kDefaultIntegerBound;  // Z: ideals nZ with n <= bound
  std::size_t cap = kDefaultCorpusCap;
  /// Random mode: sample `cap` chains (duplicates removed) with this seed.
  std::optional<std::uint64_t> seed;
};

/// Exhaustive corpus: every non-constant fuzzy ideal whose chain is a strict
/// ideal chain ending at R and whose values are a strictly decreasing
/// choice from the palette, in enumeration order. Throws ResourceError when
/// more than `cap` ideals would be produced.
std::vector<FuzzyIdeal> exhaustive_corpus(const RingPtr& ring, const CorpusOptions& options = {});

/// Random corpus of up to `cap` distinct non-constant fuzzy ideals drawn by
/// random walks up the ideal lattice; deterministic for a given seed.
std::vector<FuzzyIdeal> random_corpus(const RingPtr& ring, const CorpusOptions& options);

}  // namespace fuzzideal

namespace fuzzideal {

inline constexpr std::size_t kDefaultPairCap = 10'000;

/// All ordered index pairs of an n-element corpus, or `cap` of them drawn
/// with a generator seeded by `seed` when n^2 exceeds the cap.
std::vector<std::pair<std::size_t, std::size_t>> corpus_pairs(std::size_t n, std::size_t cap = kDefaultPairCap,
                                                              std::uint64_t seed = 1);

}  // namespace fuzzideal
