#include "fuzzideal/primeness.hpp"

#include <algorithm>
#include <unordered_map>

#include "fuzzideal/ideals.hpp"
#include "fuzzideal/parallel.hpp"

namespace fuzzideal {

namespace {

void require_nonconstant(const FuzzyIdeal& p) {
  if (p.is_constant()) throw ConstantIdealError("primeness notions need a non-constant fuzzy ideal");
}

void require_table(const Ring& r, std::string_view what) {
  if (!r.is_table()) throw BackendError(std::string(what) + " needs a table ring");
}

// Levels with value above P(1); their ideals are the cuts P_a, P(0) >= a > P(1).
std::span<const Level> proper_levels(const FuzzyIdeal& p) {
  auto c = p.chain();
  return c.first(c.size() - 1);
}

Element integer_element(std::uint64_t v) { return Element(Integer(v)); }

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return q;
  return n;
}

using Failure = std::optional<std::vector<Element>>;

// x, y outside C with xRy inside C. Over Z a composite n = p * (n / p).
Failure prime_failure(const Ring& r, const Ideal& c) {
  if (!r.is_table()) {
    std::uint64_t n = c.generator();
    if (n == 0 || is_prime_number(n)) return std::nullopt;
    std::uint64_t p = smallest_prime_factor(n);
    return std::vector{integer_element(p), integer_element(n / p)};
  }
  const auto& m = c.members();
  for (Index x = 0; x < r.size(); ++x) {
    if (m.contains(x)) continue;
    for (Index y = 0; y < r.size(); ++y) {
      if (m.contains(y)) continue;
      bool inside = true;
      for (Index z = 0; z < r.size() && inside; ++z) inside = m.contains(r.mul(r.mul(x, z), y));
      if (inside) return std::vector<Element>{x, y};
    }
  }
  return std::nullopt;
}

Failure completely_prime_failure(const Ring& r, const Ideal& c) {
  if (!r.is_table()) return prime_failure(r, c);
  const auto& m = c.members();
  for (Index x = 0; x < r.size(); ++x)
    for (Index y = 0; y < r.size(); ++y)
      if (!m.contains(x) && !m.contains(y) && m.contains(r.mul(x, y))) return std::vector<Element>{x, y};
  return std::nullopt;
}

// x outside C with xRx inside C. Over Z, p^2 | n gives x = n / p.
Failure semiprime_failure(const Ring& r, const Ideal& c) {
  if (!r.is_table()) {
    std::uint64_t n = c.generator();
    for (std::uint64_t q = 2; n != 0 && q * q <= n; ++q)
      if (n % (q * q) == 0) return std::vector{integer_element(n / q)};
    return std::nullopt;
  }
  const auto& m = c.members();
  for (Index x = 0; x < r.size(); ++x) {
    if (m.contains(x)) continue;
    bool inside = true;
    for (Index z = 0; z < r.size() && inside; ++z) inside = m.contains(r.mul(r.mul(x, z), x));
    if (inside) return std::vector<Element>{x};
  }
  return std::nullopt;
}

Failure completely_semiprime_failure(const Ring& r, const Ideal& c) {
  if (!r.is_table()) return semiprime_failure(r, c);
  const auto& m = c.members();
  for (Index x = 0; x < r.size(); ++x)
    if (!m.contains(x) && m.contains(r.mul(x, x))) return std::vector<Element>{x};
  return std::nullopt;
}

template <class F>
std::optional<Witness> first_bad_cut(const FuzzyIdeal& p, F failure) {
  for (const auto& level : proper_levels(p))
    if (auto f = failure(p.ring(), level.ideal)) return Witness{"cut", std::move(*f), {level.value}, {level.ideal}, {}};
  return std::nullopt;
}

// Least grid value strictly above v. Violations of the singleton notions
// only get easier as t decreases, so this is the only t worth trying.
std::optional<Value> grid_above(const ValueGrid& g, const Value& v) {
  for (const auto& w : g.values())
    if (w > v) return w;
  return std::nullopt;
}

const Ideal* cut_or_null(const FuzzyIdeal& f, const Value& a) {
  auto c = f.chain();
  for (std::size_t j = c.size(); j-- > 0;)
    if (c[j].value >= a) return &c[j].ideal;
  return nullptr;
}

class ProductTable {
 public:
  explicit ProductTable(const Ring& r) : ring_(r), ideals_(r.ideals()), products_(ideals_.size() * ideals_.size()) {
    for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i], i);
  }

  const Ideal& product(const Ideal& a, const Ideal& b) {
    std::size_t k = index_.at(a) * ideals_.size() + index_.at(b);
    if (!products_[k]) products_[k] = ideal_product(ring_, a, b);
    return *products_[k];
  }

 private:
  const Ring& ring_;
  const std::vector<Ideal>& ideals_;
  std::unordered_map<Ideal, std::size_t, IdealHash> index_;
  std::vector<std::optional<Ideal>> products_;
};

bool product_leq(const FuzzyIdeal& i, const FuzzyIdeal& j, const FuzzyIdeal& p, ProductTable& table) {
  auto alphas = i.image();
  for (const auto& v : j.image()) alphas.push_back(v);
  for (const auto& a : alphas) {
    if (a <= p.bottom()) continue;
    const Ideal* ia = cut_or_null(i, a);
    const Ideal* ja = cut_or_null(j, a);
    if (!ia || !ja) continue;
    const Ideal* pa = cut_or_null(p, a);
    if (!pa || !is_subset(table.product(*ia, *ja), *pa)) return false;
  }
  return true;
}

struct PrincipalClass {
  Ideal ideal;
  Index rep;  // member generating `ideal` with the least P value
};

std::vector<PrincipalClass> principal_classes(const Ring& r, std::span<const Value> pv) {
  std::vector<PrincipalClass> out;
  for (Index x = 0; x < r.size(); ++x) {
    Ideal gen = ideal_generate(r, std::span<const Index>(&x, 1));
    auto it = std::find_if(out.begin(), out.end(), [&](const PrincipalClass& c) { return c.ideal == gen; });
    if (it == out.end())
      out.push_back({std::move(gen), x});
    else if (pv[x] < pv[it->rep])
      it->rep = x;
  }
  return out;
}

ValueGrid grid_or_default(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid) {
  return grid ? *grid : ValueGrid::for_ideal(p);
}

std::optional<Witness> violation(const FuzzyIdeal& p, Notion n, const ValueGrid& g) {
  switch (n) {
    case Notion::D0: return d0_violation(p, g);
    case Notion::D0Prime: return d0prime_violation(p, g);
    case Notion::D1:
    case Notion::D1L:
    case Notion::D1R: return d1_violation(p);
    case Notion::D2: return d2_violation(p);
    case Notion::D3: return d3_violation(p);
    case Notion::D4: return d4_violation(p);
    case Notion::PrimeNew: return prime_new_violation(p);
    case Notion::SD0Prime: return sd0prime_violation(p, g);
    case Notion::SD1: return sd1_violation(p, g);
    case Notion::SD2: return sd2_violation(p);
    case Notion::SD4: return sd4_violation(p);
    case Notion::SemiprimeNew: return semiprime_new_violation(p);
  }
  return std::nullopt;
}

}  // namespace

std::string_view notion_name(Notion n) {
  switch (n) {
    case Notion::D0: return "D0";
    case Notion::D0Prime: return "D0'";
    case Notion::D1: return "D1";
    case Notion::D1L: return "D1L";
    case Notion::D1R: return "D1R";
    case Notion::D2: return "D2";
    case Notion::D3: return "D3";
    case Notion::D4: return "D4";
    case Notion::PrimeNew: return "PRIME_NEW";
    case Notion::SD0Prime: return "SD0'";
    case Notion::SD1: return "SD1";
    case Notion::SD2: return "SD2";
    case Notion::SD4: return "SD4";
    case Notion::SemiprimeNew: return "SEMIPRIME_NEW";
  }
  return "";
}

std::optional<Notion> notion_from_name(std::string_view name) {
  for (Notion n : kAllNotions)
    if (notion_name(n) == name) return n;
  return std::nullopt;
}

bool notion_supported(const Ring& ring, Notion n) {
  if (ring.is_table()) return true;
  return n != Notion::D0 && n != Notion::D0Prime && n != Notion::SD0Prime && n != Notion::SD1;
}

std::optional<Witness> prime_new_violation(const FuzzyIdeal& p) {
  require_nonconstant(p);
  const Ring& r = p.ring();
  if (!r.is_table()) return first_bad_cut(p, prime_failure);
  auto v = p.to_map();
  for (Index x = 0; x < r.size(); ++x) {
    for (Index y = 0; y < r.size(); ++y) {
      const Value& hi = max(v[x], v[y]);
      Value inf = Value::one();
      for (Index z = 0; z < r.size() && inf != hi; ++z) inf = min(inf, v[r.mul(r.mul(x, z), y)]);
      if (inf != hi) return Witness{"inf_xRy", {x, y}, {inf, v[x], v[y]}, {}, {}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> d2_violation(const FuzzyIdeal& p) {
  require_nonconstant(p);
  return first_bad_cut(p, prime_failure);
}

std::optional<Witness> d3_violation(const FuzzyIdeal& p) {
  require_nonconstant(p);
  const Level& top = p.chain().front();
  if (auto f = prime_failure(p.ring(), top.ideal)) return Witness{"top_cut", std::move(*f), {top.value}, {top.ideal}, {}};
  return std::nullopt;
}

std::optional<Witness> d4_violation(const FuzzyIdeal& p) {
  require_nonconstant(p);
  const Ring& r = p.ring();
  if (!r.is_table()) return first_bad_cut(p, completely_prime_failure);
  auto v = p.to_map();
  for (Index x = 0; x < r.size(); ++x)
    for (Index y = 0; y < r.size(); ++y) {
      const Value& xy = v[r.mul(x, y)];
      if (xy != v[x] && xy != v[y]) return Witness{"product", {x, y}, {xy, v[x], v[y]}, {}, {}};
    }
  return std::nullopt;
}

std::optional<Witness> d1_violation(const FuzzyIdeal& p) {
  require_nonconstant(p);
  if (p.chain().size() > 2) return Witness{"values", {}, p.image(), {}, {}};
  if (p.top() != Value::one()) return Witness{"top", {}, {p.top()}, {}, {}};
  const Level& top = p.chain().front();
  if (auto f = prime_failure(p.ring(), top.ideal)) return Witness{"top_cut", std::move(*f), {top.value}, {top.ideal}, {}};
  return std::nullopt;
}

std::optional<Witness> d0_violation(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid) {
  require_nonconstant(p);
  const Ring& r = p.ring();
  require_table(r, "D0");
  auto g = grid_or_default(p, grid);
  auto v = p.to_map();
  for (Index x = 0; x < r.size(); ++x) {
    auto t = grid_above(g, v[x]);
    if (!t) continue;
    for (Index y = 0; y < r.size(); ++y) {
      auto s = grid_above(g, v[y]);
      if (!s) continue;
      if (min(*t, *s) <= v[r.mul(x, y)]) return Witness{"singleton_product", {x, y}, {*t, *s}, {}, {}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> d0prime_violation(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid) {
  require_nonconstant(p);
  const Ring& r = p.ring();
  require_table(r, "D0'");
  auto g = grid_or_default(p, grid);
  auto v = p.to_map();
  struct Point {
    Index x;
    Value t;
    FuzzyIdeal generated;
  };
  std::vector<Point> points;
  for (const auto& c : principal_classes(r, v))
    if (auto t = grid_above(g, v[c.rep])) points.push_back({c.rep, *t, generate(singleton(p.ring_ptr(), {c.rep, *t}))});
  for (const auto& a : points)
    for (const auto& b : points)
      if (leq(fuzzy_product(a.generated, b.generated), p))
        return Witness{"generated_product", {a.x, b.x}, {a.t, b.t}, {}, {}};
  return std::nullopt;
}

std::optional<Witness> semiprime_new_violation(const FuzzyIdeal& p) {
  require_nonconstant(p);
  const Ring& r = p.ring();
  if (!r.is_table()) return first_bad_cut(p, semiprime_failure);
  auto v = p.to_map();
  for (Index x = 0; x < r.size(); ++x) {
    Value inf = Value::one();
    for (Index z = 0; z < r.size() && inf != v[x]; ++z) inf = min(inf, v[r.mul(r.mul(x, z), x)]);
    if (inf != v[x]) return Witness{"inf_xRx", {x}, {inf, v[x]}, {}, {}};
  }
  return std::nullopt;
}

std::optional<Witness> sd2_violation(const FuzzyIdeal& p) {
  require_nonconstant(p);
  return first_bad_cut(p, semiprime_failure);
}

std::optional<Witness> sd4_violation(const FuzzyIdeal& p) {
  require_nonconstant(p);
  const Ring& r = p.ring();
  if (!r.is_table()) return first_bad_cut(p, completely_semiprime_failure);
  auto v = p.to_map();
  for (Index x = 0; x < r.size(); ++x)
    if (v[r.mul(x, x)] != v[x]) return Witness{"square", {x}, {v[r.mul(x, x)], v[x]}, {}, {}};
  return std::nullopt;
}

std::optional<Witness> sd1_violation(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid) {
  require_nonconstant(p);
  const Ring& r = p.ring();
  require_table(r, "SD1");
  auto g = grid_or_default(p, grid);
  ProductTable table(r);
  std::optional<Witness> out;
  for_each_fuzzy_ideal(p.ring_ptr(), r.ideals(), g.values(), {}, [&](const FuzzyIdeal& i) {
    if (leq(i, p) || !product_leq(i, i, p, table)) return true;
    out = Witness{"ideal_square", {}, {}, {}, {i}};
    return false;
  });
  return out;
}

std::optional<Witness> sd0prime_violation(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid) {
  require_nonconstant(p);
  const Ring& r = p.ring();
  require_table(r, "SD0'");
  auto g = grid_or_default(p, grid);
  auto v = p.to_map();
  for (const auto& c : principal_classes(r, v)) {
    auto t = grid_above(g, v[c.rep]);
    if (!t) continue;
    auto gen = generate(singleton(p.ring_ptr(), {c.rep, *t}));
    if (leq(fuzzy_product(gen, gen), p)) return Witness{"generated_square", {c.rep}, {*t}, {}, {}};
  }
  return std::nullopt;
}

bool completely_prime_cuts(const FuzzyIdeal& p) {
  require_nonconstant(p);
  return !first_bad_cut(p, completely_prime_failure);
}

bool completely_semiprime_cuts(const FuzzyIdeal& p) {
  require_nonconstant(p);
  return !first_bad_cut(p, completely_semiprime_failure);
}

bool product_leq(const FuzzyIdeal& i, const FuzzyIdeal& j, const FuzzyIdeal& p) {
  require_table(p.ring(), "product_leq");
  ProductTable table(p.ring());
  return product_leq(i, j, p, table);
}

D1Search d1_falsify_search(const FuzzyIdeal& p, const ValueGrid& grid, std::size_t budget) {
  const Ring& r = p.ring();
  require_table(r, "d1_falsify_search");
  std::vector<FuzzyIdeal> outside;
  for_each_fuzzy_ideal(p.ring_ptr(), r.ideals(), grid.values(), {}, [&](const FuzzyIdeal& i) {
    if (!leq(i, p)) outside.push_back(i);
    return true;
  });
  ProductTable table(r);
  D1Search out;
  for (const auto& i : outside) {
    for (const auto& j : outside) {
      if (out.pairs_checked == budget) {
        out.exhausted = true;
        return out;
      }
      ++out.pairs_checked;
      if (product_leq(i, j, p, table)) {
        out.witness.emplace(i, j);
        return out;
      }
    }
  }
  return out;
}

ClassificationReport classify(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid) {
  require_nonconstant(p);
  auto g = grid_or_default(p, grid);
  ClassificationReport report;
  report.commutative = p.ring().is_commutative();
  std::optional<std::optional<Witness>> d1;
  for (Notion n : kAllNotions) {
    if (!notion_supported(p.ring(), n)) {
      report.unsupported.push_back(n);
      continue;
    }
    std::optional<Witness> w;
    if (n == Notion::D1 || n == Notion::D1L || n == Notion::D1R) {
      if (!d1) d1 = d1_violation(p);
      w = *d1;
    } else {
      w = violation(p, n, g);
    }
    report.notions[n] = !w;
    if (w) report.witnesses[n] = std::move(*w);
  }
  return report;
}

CharprimeReport charprime_equivalence_check(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid) {
  require_nonconstant(p);
  const Ring& r = p.ring();
  require_table(r, "charprime_equivalence_check");
  auto g = grid_or_default(p, grid);
  CharprimeReport out;
  out.prime_new = is_prime_new(p);
  out.prime_cuts = std::ranges::all_of(proper_levels(p), [&](const Level& l) { return is_prime_ideal(r, l.ideal); });
  out.prime_quotients = std::ranges::all_of(proper_levels(p), [&](const Level& l) {
    auto q = quotient_ring(p.ring_ptr(), l.ideal);
    return is_prime_ideal(*q.ring, zero_ideal(*q.ring));
  });

  // (d): no fuzzy ideal I with I(xry) <= P(xry) for all r but I(x) > P(x)
  // and I(y) > P(y). With bad = {z : I(z) > P(z)} this asks for x, y in bad
  // with xRy disjoint from bad.
  const std::size_t n = r.size();
  std::vector<ElementSet> xry(n * n, ElementSet(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) xry[x * n + y].insert(r.mul(r.mul(x, z), y));
  auto pv = p.to_map();
  bool counterexample = false;
  for_each_fuzzy_ideal(p.ring_ptr(), r.ideals(), g.values(), {}, [&](const FuzzyIdeal& i) {
    auto iv = i.to_map();
    ElementSet bad(n);
    std::vector<Index> listed;
    for (Index z = 0; z < n; ++z)
      if (iv[z] > pv[z]) {
        bad.insert(z);
        listed.push_back(z);
      }
    for (Index x : listed)
      for (Index y : listed)
        if (!xry[x * n + y].intersects(bad)) {
          counterexample = true;
          return false;
        }
    return true;
  });
  out.ideal_test = !counterexample;
  if (r.is_commutative()) out.d4 = is_D4(p);

  std::vector<std::pair<const char*, bool>> seen = {{"(a) inf condition", out.prime_new},
                                                    {"(b) prime cuts", out.prime_cuts},
                                                    {"(c) prime quotient rings", out.prime_quotients},
                                                    {"(d) fuzzy ideal test", out.ideal_test}};
  if (out.d4) seen.emplace_back("D4", *out.d4);
  for (const auto& [name, value] : seen)
    if (value != seen.front().second)
      throw CheckFailure(std::string("primeness characterizations disagree: ") + seen.front().first + " is " +
                         (seen.front().second ? "true" : "false") + " but " + name + " is " +
                         (value ? "true" : "false"));
  return out;
}

std::vector<const DiagramEdge*> DiagramReport::violations() const {
  std::vector<const DiagramEdge*> out;
  for (const auto& e : edges)
    if (e.asserted && e.status != "implied") out.push_back(&e);
  return out;
}

namespace {

constexpr std::string_view kCompletelyPrimeCuts = "completely prime cuts";
constexpr std::string_view kCompletelySemiprimeCuts = "completely semiprime cuts";

using Facts = std::map<std::string, bool, std::less<>>;

Facts facts_of(const FuzzyIdeal& p) {
  Facts f;
  auto report = classify(p);
  for (const auto& [n, value] : report.notions) f.emplace(notion_name(n), value);
  f.emplace(kCompletelyPrimeCuts, completely_prime_cuts(p));
  f.emplace(kCompletelySemiprimeCuts, completely_semiprime_cuts(p));
  return f;
}

// Arrows of the two diagrams that are checked as theorems. The singleton
// arrows D0 -> D0' and (commutative) D0' -> D0 are only reported.
std::vector<std::pair<std::string, std::string>> asserted_arrows(bool commutative) {
  std::vector<std::pair<std::string, std::string>> a = {
      {"D0'", "D1"},   {"D1", "D0'"},           {"D1", "D2"},           {"D4", "D2"},
      {"D2", "D3"},    {"D2", "PRIME_NEW"},     {"PRIME_NEW", "D2"},    {"PRIME_NEW", "SEMIPRIME_NEW"},
      {"SD0'", "SD1"}, {"SD1", "SD0'"},         {"SD1", "SD2"},         {"SD4", "SD2"},
      {"SD2", "SEMIPRIME_NEW"}, {"SEMIPRIME_NEW", "SD2"}};
  if (commutative) {
    for (auto e : {std::pair<std::string, std::string>{"D1", "D4"}, {"D2", "D4"}, {"SD1", "SD4"}, {"SD4", "SD1"},
                   {"SD2", "SD4"}})
      a.push_back(e);
  }
  return a;
}

}  // namespace

DiagramReport diagram_check(std::span<const FuzzyIdeal> corpus, unsigned jobs) {
  if (corpus.empty()) throw DomainError("diagram_check needs a nonempty corpus");
  const Ring& ring = corpus.front().ring();
  for (const auto& p : corpus)
    if (!same_ring(p.ring(), ring)) throw DomainError("corpus mixes fuzzy ideals of different rings");

  std::vector<Facts> facts(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) { facts[i] = facts_of(corpus[i]); });

  DiagramReport report;
  report.corpus_size = corpus.size();
  report.commutative = ring.is_commutative();

  std::vector<std::string> prime = {"D0", "D0'", "D1", "D2", "D3", "D4", "PRIME_NEW"};
  std::vector<std::string> semi = {"SD0'", "SD1", "SD2", "SD4", "SEMIPRIME_NEW"};
  auto supported = [&](const std::string& name) { return facts.front().contains(name); };
  std::erase_if(prime, [&](const auto& s) { return !supported(s); });
  std::erase_if(semi, [&](const auto& s) { return !supported(s); });

  // Transitive closure of the asserted arrows.
  std::vector<std::string> nodes = prime;
  nodes.insert(nodes.end(), semi.begin(), semi.end());
  auto pos = [&](const std::string& s) { return std::ranges::find(nodes, s) - nodes.begin(); };
  const std::size_t k = nodes.size();
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) reach[i][i] = true;
  for (const auto& [a, b] : asserted_arrows(report.commutative))
    if (supported(a) && supported(b)) reach[pos(a)][pos(b)] = true;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (reach[i][m] && reach[m][j]) reach[i][j] = true;

  auto add_edge = [&](const std::string& a, const std::string& b, bool iff, bool asserted) {
    DiagramEdge e;
    e.edge = a + (iff ? " <-> " : " -> ") + b;
    e.asserted = asserted;
    e.status = "implied";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      bool lhs = facts[i].find(a)->second, rhs = facts[i].find(b)->second;
      if ((lhs && !rhs) || (iff && rhs && !lhs)) {
        e.status = "counterexample";
        e.corpus_index = i;
        e.example = corpus[i];
        break;
      }
    }
    report.edges.push_back(std::move(e));
  };

  add_edge("D1", "D1L", true, true);
  add_edge("D1", "D1R", true, true);
  add_edge("D4", std::string(kCompletelyPrimeCuts), true, true);
  add_edge("SD4", std::string(kCompletelySemiprimeCuts), true, true);
  for (const auto* family : {&prime, &semi})
    for (const auto& a : *family)
      for (const auto& b : *family)
        if (a != b) add_edge(a, b, false, reach[pos(a)][pos(b)]);
  add_edge("PRIME_NEW", "SEMIPRIME_NEW", false, reach[pos("PRIME_NEW")][pos("SEMIPRIME_NEW")]);
  add_edge("SEMIPRIME_NEW", "PRIME_NEW", false, false);
  return report;
}

FuzzyIdeal minimal_prime_below(const FuzzyIdeal& q) {
  if (!is_prime_new(q)) throw DomainError("minimal_prime_below needs a prime fuzzy ideal");
  const Ring& r = q.ring();
  Ideal star = top_cut(q);
  std::optional<Ideal> m;
  if (r.is_table()) {
    for (const auto& candidate : minimal_primes(r))
      if (is_subset(candidate, star)) {
        m = candidate;
        break;
      }
  } else {
    m = Ideal::multiples(0);  // Z is a domain: 0Z is the only minimal prime
  }
  if (!m) throw CheckFailure("no minimal prime below the top cut");
  auto out = two_valued(q.ring_ptr(), *m, q.top(), q.bottom());
  if (!leq(out, q) || !is_prime_new(out) || !value_equivalent(out, two_valued(q.ring_ptr(), *m, Value::one(), Value::zero())))
    throw CheckFailure("minimal prime construction failed its postcondition");
  return out;
}

std::size_t count_minimal_prime_classes(const Ring& ring) {
  require_table(ring, "count_minimal_prime_classes");
  return minimal_primes(ring).size();
}

namespace {

template <class Pred>
bool all_zero_type(const RingPtr& ring, const ValueGrid& grid, Pred pred) {
  auto v = grid.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!pred(zero_type(ring, v[j], v[i]))) return false;
  return true;
}

}  // namespace

BridgeResult prime_ring_bridge(const RingPtr& ring, const ValueGrid& grid) {
  return {is_prime_ideal(*ring, zero_ideal(*ring)),
          all_zero_type(ring, grid, [](const FuzzyIdeal& p) { return is_prime_new(p); })};
}

BridgeResult semiprime_ring_bridge(const RingPtr& ring, const ValueGrid& grid) {
  return {is_semiprime_ideal(*ring, zero_ideal(*ring)),
          all_zero_type(ring, grid, [](const FuzzyIdeal& p) { return is_semiprime_new(p); })};
}

}  // namespace fuzzideal
