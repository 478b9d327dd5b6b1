#include "fuzzideal/fuzzy.hpp"

#include <algorithm>

#include "fuzzideal/ideals.hpp"

namespace fuzzideal {

namespace {

bool is_ideal_of(const Ring& ring, const Ideal& ideal) {
  if (!ring.is_table()) return !ideal.is_table() && ideal.generator() <= kMaxIntegerGenerator;
  if (!ideal.is_table() || ideal.members().universe() != ring.size()) return false;
  if (!ideal.members().contains(ring.zero())) return false;
  return ideal_generate(ring, ideal.members().members()) == ideal;
}

void require_table(const Ring& ring, const char* what) {
  if (!ring.is_table()) throw BackendError(std::string(what) + " is not supported on the integer backend");
}

void require_same_ring(const FuzzyIdeal& a, const FuzzyIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw DomainError("fuzzy ideals over different rings");
}

std::vector<Value> sorted_desc(std::vector<Value> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

AxiomViolation::AxiomViolation(Index x, Index y, std::string axiom)
    : InvalidFuzzyIdeal("fuzzy ideal axiom '" + axiom + "' fails at element indices " +
                        std::to_string(x) + ", " + std::to_string(y)),
      x_(x),
      y_(y),
      axiom_(std::move(axiom)) {}

FuzzyIdeal::FuzzyIdeal(RingPtr ring, std::vector<Level> chain) : ring_(std::move(ring)), chain_(std::move(chain)) {
  if (chain_.empty()) throw InvalidFuzzyIdeal("cut chain is empty");
  for (std::size_t j = 0; j < chain_.size(); ++j) {
    if (!is_ideal_of(*ring_, chain_[j].ideal))
      throw InvalidFuzzyIdeal("level " + std::to_string(j + 1) + " is not an ideal of the ring");
    if (j == 0) continue;
    const Level& prev = chain_[j - 1];
    if (!(chain_[j].value < prev.value))
      throw InvalidFuzzyIdeal("values must strictly decrease (level " + std::to_string(j + 1) + ")");
    if (!is_subset(prev.ideal, chain_[j].ideal) || prev.ideal == chain_[j].ideal)
      throw InvalidFuzzyIdeal("ideals must strictly increase (level " + std::to_string(j + 1) + ")");
  }
  if (!is_whole(*ring_, chain_.back().ideal)) throw InvalidFuzzyIdeal("last level must be the whole ring");
}

Value FuzzyIdeal::at(const Element& x) const {
  for (const auto& level : chain_)
    if (contains(*ring_, level.ideal, x)) return level.value;
  return bottom();
}

Value FuzzyIdeal::at(Index x) const {
  for (const auto& level : chain_)
    if (level.ideal.members().contains(x)) return level.value;
  return bottom();
}

std::vector<Value> FuzzyIdeal::image() const {
  std::vector<Value> out;
  for (const auto& level : chain_) out.push_back(level.value);
  return out;
}

std::vector<Value> FuzzyIdeal::to_map() const {
  require_table(*ring_, "to_map");
  std::vector<Value> out(ring_->size(), bottom());
  for (std::size_t j = chain_.size(); j-- > 0;)
    for (Index x : chain_[j].ideal.members().members()) out[x] = chain_[j].value;
  return out;
}

FuzzyIdeal fuzzy_from_map(const RingPtr& ring, std::span<const Value> f) {
  require_table(*ring, "fuzzy_from_map");
  const Ring& r = *ring;
  if (f.size() != r.size()) throw DomainError("assignment must give a value to every element");
  for (Index x = 0; x < r.size(); ++x) {
    for (Index y = 0; y < r.size(); ++y) {
      if (f[r.sub(x, y)] < min(f[x], f[y])) throw AxiomViolation(x, y, "difference");
      if (f[r.mul(x, y)] < max(f[x], f[y])) throw AxiomViolation(x, y, "product");
    }
  }
  std::vector<Level> levels;
  for (const Value& alpha : sorted_desc({f.begin(), f.end()})) {
    ElementSet members(r.size());
    for (Index x = 0; x < r.size(); ++x)
      if (f[x] >= alpha) members.insert(x);
    Ideal c(std::move(members));
    if (!is_ideal_of(r, c)) throw CheckFailure("pointwise axioms hold but a cut is not an ideal");
    levels.push_back({std::move(c), alpha});
  }
  return FuzzyIdeal(ring, std::move(levels));
}

FuzzyIdeal fuzzy_from_chain(const RingPtr& ring, std::vector<Level> chain) {
  return FuzzyIdeal(ring, std::move(chain));
}

FuzzyIdeal normalize_levels(const RingPtr& ring, std::vector<Level> levels) {
  std::vector<Level> out;
  for (auto& level : levels) {
    if (!out.empty() && out.back().ideal == level.ideal) continue;
    out.push_back(std::move(level));
  }
  return FuzzyIdeal(ring, std::move(out));
}

FuzzyIdeal two_valued(const RingPtr& ring, const Ideal& ideal, Value high, Value low) {
  if (is_whole(*ring, ideal)) return FuzzyIdeal(ring, {{ideal, high}});
  return FuzzyIdeal(ring, {{ideal, high}, {whole_ideal(*ring), low}});
}

FuzzyIdeal zero_type(const RingPtr& ring, Value t, Value s) {
  if (!(s < t)) throw DomainError("zero-type ideal needs s < t");
  return two_valued(ring, zero_ideal(*ring), t, s);
}

Ideal cut(const FuzzyIdeal& f, const Value& alpha) {
  if (alpha > f.top()) throw DomainError("cut above F(0) is empty");
  const Ideal* result = &f.chain().front().ideal;
  for (const auto& level : f.chain())
    if (level.value >= alpha) result = &level.ideal;
  return *result;
}

Ideal top_cut(const FuzzyIdeal& f) { return f.chain().front().ideal; }

Ideal strict_support(const FuzzyIdeal& f) {
  if (f.is_constant()) throw ConstantIdealError("strict support of a constant fuzzy ideal");
  return f.chain()[f.chain().size() - 2].ideal;
}

bool leq(const FuzzyIdeal& i, const FuzzyIdeal& j) {
  require_same_ring(i, j);
  for (const auto& level : i.chain()) {
    if (level.value > j.top()) return false;
    if (!is_subset(level.ideal, cut(j, level.value))) return false;
  }
  return true;
}

FuzzyIdeal intersect(std::span<const FuzzyIdeal> family) {
  if (family.empty()) throw DomainError("intersection of an empty family");
  Value ceiling = family.front().top();
  std::vector<Value> values;
  for (const auto& f : family) {
    require_same_ring(family.front(), f);
    ceiling = min(ceiling, f.top());
    for (const auto& v : f.image()) values.push_back(v);
  }
  std::vector<Level> levels;
  const Ring& ring = family.front().ring();
  for (const Value& alpha : sorted_desc(std::move(values))) {
    if (alpha > ceiling) continue;
    Ideal c = cut(family.front(), alpha);
    for (const auto& f : family.subspan(1)) c = meet(ring, c, cut(f, alpha));
    levels.push_back({std::move(c), alpha});
  }
  return normalize_levels(family.front().ring_ptr(), std::move(levels));
}

bool value_equivalent(const FuzzyIdeal& i, const FuzzyIdeal& j) {
  require_same_ring(i, j);
  if (i.chain().size() != j.chain().size()) return false;
  for (std::size_t k = 0; k < i.chain().size(); ++k)
    if (i.chain()[k].ideal != j.chain()[k].ideal) return false;
  return true;
}

FuzzySet to_set(const FuzzyIdeal& f) { return {f.ring_ptr(), f.to_map()}; }

FuzzySet singleton(const RingPtr& ring, FuzzyPoint point) {
  require_table(*ring, "singleton");
  if (point.value == Value::zero()) throw DomainError("fuzzy point needs a positive value");
  FuzzySet s = constant_set(ring, Value::zero());
  s.values.at(point.element) = point.value;
  return s;
}

FuzzySet constant_set(const RingPtr& ring, Value v) {
  require_table(*ring, "fuzzy sets");
  return {ring, std::vector<Value>(ring->size(), v)};
}

FuzzySet compose(const FuzzySet& a, const FuzzySet& b) {
  require_table(*a.ring, "compose");
  if (!same_ring(*a.ring, *b.ring)) throw DomainError("fuzzy sets over different rings");
  const Ring& r = *a.ring;
  FuzzySet out = constant_set(a.ring, Value::zero());
  for (Index x = 0; x < r.size(); ++x) {
    for (Index y = 0; y < r.size(); ++y) {
      Index z = r.mul(x, y);
      out.values[z] = max(out.values[z], min(a.values[x], b.values[y]));
    }
  }
  return out;
}

FuzzyIdeal generate(const FuzzySet& f) {
  require_table(*f.ring, "generate");
  const Ring& r = *f.ring;
  std::vector<Level> levels;
  for (const Value& alpha : sorted_desc(f.values)) {
    std::vector<Index> gens;
    for (Index x = 0; x < r.size(); ++x)
      if (f.values[x] >= alpha) gens.push_back(x);
    levels.push_back({ideal_generate(r, gens), alpha});
  }
  return normalize_levels(f.ring, std::move(levels));
}

FuzzyIdeal fuzzy_product(const FuzzyIdeal& i, const FuzzyIdeal& j) {
  require_table(i.ring(), "fuzzy_product");
  require_same_ring(i, j);
  return generate(compose(to_set(i), to_set(j)));
}

bool leq(const FuzzySet& a, const FuzzySet& b) {
  for (std::size_t x = 0; x < a.values.size(); ++x)
    if (a.values[x] > b.values.at(x)) return false;
  return true;
}

bool leq(const FuzzySet& a, const FuzzyIdeal& b) { return leq(a, to_set(b)); }

}  // namespace fuzzideal
