#include "fuzzideal/grid.hpp"

#include <algorithm>

#include "fuzzideal/ideals.hpp"

namespace fuzzideal {

namespace {

std::vector<Value> normalized(std::vector<Value> v) {
  v.push_back(Value::zero());
  v.push_back(Value::one());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

ValueGrid ValueGrid::refine(std::span<const Value> seeds) {
  auto base = normalized({seeds.begin(), seeds.end()});
  ValueGrid g;
  for (std::size_t i = 0; i < base.size(); ++i) {
    g.values_.push_back(base[i]);
    if (i + 1 < base.size()) g.values_.push_back(Value::midpoint(base[i], base[i + 1]));
  }
  return g;
}

ValueGrid ValueGrid::for_ideal(const FuzzyIdeal& f) {
  auto image = f.image();
  return refine(image);
}

ValueGrid ValueGrid::exact(std::span<const Value> values) {
  ValueGrid g;
  g.values_ = normalized({values.begin(), values.end()});
  return g;
}

std::vector<Ideal> search_ideals(const Ring& ring, std::uint64_t bound) {
  if (ring.is_table()) return ring.ideals();
  return enumerate_ideals(ring, bound);
}

std::size_t for_each_fuzzy_ideal(const RingPtr& ring, std::span<const Ideal> ideals,
                                 std::span<const Value> values_in, const FamilyOptions& options,
                                 const std::function<bool(const FuzzyIdeal&)>& visit) {
  const Ring& r = *ring;
  std::vector<Value> values(values_in.begin(), values_in.end());
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  const std::size_t n = ideals.size();
  std::vector<bool> whole(n), allowed(n);
  for (std::size_t i = 0; i < n; ++i) {
    whole[i] = is_whole(r, ideals[i]);
    allowed[i] = whole[i] || !options.level_filter || options.level_filter(ideals[i]);
  }
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && allowed[j] && is_subset(ideals[i], ideals[j]) && ideals[i] != ideals[j]) above[i].push_back(j);

  const FuzzyIdeal* lb = options.lower_bound;
  // Cut of the partial chain for alpha in (v_next, v_prev] is `prev`; every
  // lower-bound level whose value falls in that window must fit inside it.
  auto window_ok = [&](std::size_t prev, const Value& v_prev, const Value& v_next) {
    if (!lb) return true;
    for (const auto& level : lb->chain())
      if (level.value > v_next && level.value <= v_prev && !is_subset(level.ideal, ideals[prev])) return false;
    return true;
  };

  std::size_t visited = 0;
  bool stop = false;
  std::vector<Level> chain;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t ideal, std::size_t value_pos) {
    if (whole[ideal]) {
      ++visited;
      if (!visit(FuzzyIdeal(ring, chain))) stop = true;
      return;
    }
    for (std::size_t next : above[ideal]) {
      for (std::size_t vp = value_pos + 1; vp < values.size() && !stop; ++vp) {
        if (!window_ok(ideal, values[value_pos], values[vp])) continue;
        chain.push_back({ideals[next], values[vp]});
        extend(next, vp);
        chain.pop_back();
      }
      if (stop) return;
    }
  };

  for (std::size_t i = 0; i < n && !stop; ++i) {
    if (!allowed[i]) continue;
    if (whole[i] && !options.include_constant) continue;
    for (std::size_t vp = 0; vp < values.size() && !stop; ++vp) {
      if (lb && lb->top() > values[vp]) continue;
      chain.assign(1, {ideals[i], values[vp]});
      extend(i, vp);
    }
  }
  return visited;
}

}  // namespace fuzzideal
