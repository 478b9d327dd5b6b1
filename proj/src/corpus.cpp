#include "fuzzideal/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "fuzzideal/grid.hpp"
#include "fuzzideal/ideals.hpp"

namespace fuzzideal {

std::vector<Value> default_palette() {
  return {Value(1), Value(3, 4), Value(1, 2), Value(1, 4), Value(0)};
}

std::vector<FuzzyIdeal> exhaustive_corpus(const RingPtr& ring, const CorpusOptions& options) {
  auto ideals = search_ideals(*ring, options.bound);
  FamilyOptions family;
  family.include_constant = false;
  std::vector<FuzzyIdeal> out;
  for_each_fuzzy_ideal(ring, ideals, options.palette, family, [&](const FuzzyIdeal& f) {
    if (out.size() == options.cap)
      throw ResourceError("exhaustive corpus exceeds the cap of " + std::to_string(options.cap) + " fuzzy ideals");
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<FuzzyIdeal> random_corpus(const RingPtr& ring, const CorpusOptions& options) {
  if (!options.seed) throw DomainError("random corpus needs a seed");
  const Ring& r = *ring;
  auto ideals = search_ideals(r, options.bound);
  std::vector<Value> palette = options.palette;
  std::sort(palette.begin(), palette.end(), std::greater<>());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

  const std::size_t n = ideals.size();
  std::vector<std::size_t> proper;
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_whole(r, ideals[i])) proper.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && is_subset(ideals[i], ideals[j]) && ideals[i] != ideals[j]) above[i].push_back(j);
  }
  if (proper.empty() || palette.size() < 2) return {};

  std::mt19937_64 rng(*options.seed);
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  std::set<std::vector<std::size_t>> seen;
  std::vector<FuzzyIdeal> out;
  const std::size_t attempts = options.cap * 8 + 64;
  for (std::size_t a = 0; a < attempts && out.size() < options.cap; ++a) {
    std::vector<std::size_t> chain = {proper[pick(proper.size())]};
    while (!is_whole(r, ideals[chain.back()])) chain.push_back(above[chain.back()][pick(above[chain.back()].size())]);
    if (chain.size() > palette.size()) continue;
    std::vector<std::size_t> slots(palette.size());
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
    std::shuffle(slots.begin(), slots.end(), rng);
    slots.resize(chain.size());
    std::sort(slots.begin(), slots.end());
    std::vector<std::size_t> key = chain;
    key.insert(key.end(), slots.begin(), slots.end());
    if (!seen.insert(key).second) continue;
    std::vector<Level> levels;
    for (std::size_t i = 0; i < chain.size(); ++i) levels.push_back({ideals[chain[i]], palette[slots[i]]});
    out.emplace_back(ring, std::move(levels));
  }
  return out;
}

}  // namespace fuzzideal

namespace fuzzideal {

std::vector<std::pair<std::size_t, std::size_t>> corpus_pairs(std::size_t n, std::size_t cap, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n == 0) return out;
  if (n <= cap / n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.emplace_back(i, j);
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < cap; ++k) out.emplace_back(pick(rng), pick(rng));
  return out;
}

}  // namespace fuzzideal
