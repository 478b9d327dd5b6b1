#include "fuzzideal/ring.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "detail.hpp"
#include "fuzzideal/errors.hpp"
#include "fuzzideal/ideals.hpp"

namespace fuzzideal {

class RingBuilder {
 public:
  using BinaryOp = std::function<Index(Index, Index)>;

  static RingPtr integers(RingSpec spec) {
    auto ring = std::shared_ptr<Ring>(new Ring());
    ring->backend_ = Backend::Integers;
    ring->spec_ = std::move(spec);
    ring->commutative_ = true;
    return ring;
  }

  // Fills the tables from the given operations and derives everything else.
  static RingPtr table(RingSpec spec, std::size_t n, Layout layout, const BinaryOp& add,
                       const BinaryOp& mul) {
    if (n < 2) throw DomainError("the zero ring is not admitted");
    if (n > 65536) throw ResourceError("table rings are limited to 65536 elements");
    auto ring = std::shared_ptr<Ring>(new Ring());
    ring->backend_ = Backend::Table;
    ring->spec_ = std::move(spec);
    ring->size_ = n;
    ring->layout_ = std::move(layout);
    ring->add_.resize(n * n);
    ring->mul_.resize(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        ring->add_[a * n + b] = static_cast<std::uint16_t>(add(a, b));
        ring->mul_[a * n + b] = static_cast<std::uint16_t>(mul(a, b));
      }
    }
    Ring& r = *ring;

    for (Index z = 0; z < n; ++z) {
      if (r.add(z, z) == z) {
        r.zero_ = z;
        break;
      }
    }

    r.neg_.assign(n, 0);
    for (Index a = 0; a < n; ++a) {
      bool found = false;
      for (Index b = 0; b < n && !found; ++b) {
        if (r.add(a, b) == r.zero_) {
          r.neg_[a] = static_cast<std::uint16_t>(b);
          found = true;
        }
      }
      if (!found) throw DomainError("addition table has no inverses");
    }

    bool has_one = false;
    for (Index u = 0; u < n && !has_one; ++u) {
      bool unit = true;
      for (Index x = 0; x < n && unit; ++x) unit = r.mul(u, x) == x && r.mul(x, u) == x;
      if (unit) {
        r.one_ = u;
        has_one = true;
      }
    }
    if (!has_one) throw DomainError("multiplication table has no unity");

    r.commutative_ = true;
    for (Index a = 0; a < n && r.commutative_; ++a)
      for (Index b = a + 1; b < n && r.commutative_; ++b)
        r.commutative_ = r.mul(a, b) == r.mul(b, a);

    ElementSet span(n);
    span.insert(r.zero_);
    std::vector<Index> members{r.zero_};
    for (Index x = 0; x < n; ++x) {
      if (span.contains(x)) continue;
      r.additive_generators_.push_back(x);
      detail::extend_subgroup(r, span, members, x);
    }
    return ring;
  }
};

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t limit) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (result > limit / base) throw ResourceError("ring would exceed the size limit");
    result *= base;
  }
  return result;
}

void require_table(const Ring& base, const char* what) {
  if (!base.is_table())
    throw DomainError(std::string(what) + " over the integer ring is not a finite ring");
}

// Mixed-radix decoding with the first component most significant.
std::vector<Index> decode(Index x, std::size_t radix, std::size_t digits) {
  std::vector<Index> out(digits);
  for (std::size_t i = digits; i-- > 0;) {
    out[i] = static_cast<Index>(x % radix);
    x = static_cast<Index>(x / radix);
  }
  return out;
}

Index encode(std::span<const Index> digits, std::size_t radix) {
  std::size_t x = 0;
  for (Index d : digits) x = x * radix + d;
  return static_cast<Index>(x);
}

RingPtr build_cyclic(RingSpec spec, std::uint64_t n, const BuildOptions& options) {
  if (n < 2) throw DomainError("Zn requires n >= 2");
  if (n > options.size_limit) throw ResourceError("ring would exceed the size limit");
  Layout layout;
  layout.kind = Layout::Kind::Cyclic;
  auto m = static_cast<Index>(n);
  return RingBuilder::table(
      std::move(spec), n, std::move(layout), [m](Index a, Index b) { return (a + b) % m; },
      [m](Index a, Index b) {
        return static_cast<Index>(static_cast<std::uint64_t>(a) * b % m);
      });
}

RingPtr build_matrix(RingSpec spec, bool triangular, const BuildOptions& options) {
  const std::size_t k = spec.n;
  if (k < 1) throw DomainError("matrix dimension must be at least 1");
  RingPtr base = build_ring(spec.children.at(0), options);
  require_table(*base, triangular ? "Tri" : "Mat");

  Layout layout;
  layout.kind = triangular ? Layout::Kind::Triangular : Layout::Kind::Matrix;
  layout.dim = k;
  layout.parts = {base};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = triangular ? i : 0; j < k; ++j) layout.positions.emplace_back(i, j);

  const std::size_t b = base->size();
  const std::size_t e = layout.positions.size();
  const std::size_t n = checked_power(b, e, options.size_limit);

  std::vector<std::vector<Index>> entries(n);
  for (Index x = 0; x < n; ++x) entries[x] = decode(x, b, e);

  const auto positions = layout.positions;
  auto full = [&](const std::vector<Index>& flat) {
    std::vector<Index> m(k * k, base->zero());
    for (std::size_t p = 0; p < e; ++p) m[positions[p].first * k + positions[p].second] = flat[p];
    return m;
  };
  std::vector<std::vector<Index>> dense(n);
  for (Index x = 0; x < n; ++x) dense[x] = full(entries[x]);

  auto add = [&](Index x, Index y) {
    std::vector<Index> out(e);
    for (std::size_t p = 0; p < e; ++p) out[p] = base->add(entries[x][p], entries[y][p]);
    return encode(out, b);
  };
  auto mul = [&](Index x, Index y) {
    const auto& a = dense[x];
    const auto& c = dense[y];
    std::vector<Index> out(e);
    for (std::size_t p = 0; p < e; ++p) {
      auto [i, j] = positions[p];
      Index acc = base->zero();
      for (std::size_t l = 0; l < k; ++l) acc = base->add(acc, base->mul(a[i * k + l], c[l * k + j]));
      out[p] = acc;
    }
    return encode(out, b);
  };
  return RingBuilder::table(std::move(spec), n, std::move(layout), add, mul);
}

RingPtr build_product(RingSpec spec, const BuildOptions& options) {
  if (spec.children.size() < 2) throw DomainError("Prod requires at least two factors");
  Layout layout;
  layout.kind = Layout::Kind::Product;
  std::size_t n = 1;
  for (const auto& child : spec.children) {
    RingPtr factor = build_ring(child, options);
    require_table(*factor, "Prod");
    if (n > options.size_limit / factor->size()) throw ResourceError("ring would exceed the size limit");
    n *= factor->size();
    layout.parts.push_back(std::move(factor));
  }
  const auto parts = layout.parts;
  std::vector<std::vector<Index>> tuples(n);
  for (Index x = 0; x < n; ++x) {
    std::vector<Index> t(parts.size());
    Index rest = x;
    for (std::size_t i = parts.size(); i-- > 0;) {
      t[i] = static_cast<Index>(rest % parts[i]->size());
      rest = static_cast<Index>(rest / parts[i]->size());
    }
    tuples[x] = std::move(t);
  }
  auto combine = [&](auto&& op) {
    return [&, op](Index x, Index y) {
      std::size_t code = 0;
      for (std::size_t i = 0; i < parts.size(); ++i)
        code = code * parts[i]->size() + op(*parts[i], tuples[x][i], tuples[y][i]);
      return static_cast<Index>(code);
    };
  };
  auto add = combine([](const Ring& r, Index a, Index b) { return r.add(a, b); });
  auto mul = combine([](const Ring& r, Index a, Index b) { return r.mul(a, b); });
  return RingBuilder::table(std::move(spec), n, std::move(layout), add, mul);
}

RingPtr integer_quotient(RingSpec spec, const RingPtr& z, std::uint64_t n, const BuildOptions& options) {
  if (n == 1) throw DomainError("quotient by the whole ring is the zero ring");
  if (n == 0) throw DomainError("quotient of Z by the zero ideal is infinite");
  if (n > options.size_limit) throw ResourceError("ring would exceed the size limit");
  Layout layout;
  layout.kind = Layout::Kind::Quotient;
  layout.parts = {z};
  layout.modulus = n;
  auto m = static_cast<Index>(n);
  return RingBuilder::table(
      std::move(spec), n, std::move(layout), [m](Index a, Index b) { return (a + b) % m; },
      [m](Index a, Index b) {
        return static_cast<Index>(static_cast<std::uint64_t>(a) * b % m);
      });
}

RingPtr table_quotient(RingSpec spec, const RingPtr& parent, const Ideal& ideal) {
  const Ring& r = *parent;
  if (is_whole(r, ideal)) throw DomainError("quotient by the whole ring is the zero ring");
  const auto members = ideal.members().members();
  Layout layout;
  layout.kind = Layout::Kind::Quotient;
  layout.parts = {parent};
  layout.projection.assign(r.size(), 0);
  std::vector<bool> seen(r.size(), false);
  for (Index x = 0; x < r.size(); ++x) {
    if (seen[x]) continue;
    auto coset = static_cast<Index>(layout.representatives.size());
    layout.representatives.push_back(x);
    for (Index i : members) {
      Index y = r.add(x, i);
      seen[y] = true;
      layout.projection[y] = coset;
    }
  }
  const auto reps = layout.representatives;
  const auto proj = layout.projection;
  const std::size_t n = reps.size();
  return RingBuilder::table(
      std::move(spec), n, std::move(layout),
      [&](Index a, Index b) { return proj[r.add(reps[a], reps[b])]; },
      [&](Index a, Index b) { return proj[r.mul(reps[a], reps[b])]; });
}

RingPtr build_quotient(RingSpec spec, const BuildOptions& options) {
  RingPtr parent = build_ring(spec.children.at(0), options);
  if (spec.ideal.whole) throw DomainError("quotient by the whole ring is the zero ring");
  std::vector<Element> gens;
  for (const auto& lit : spec.ideal.generators) gens.push_back(element_from_literal(*parent, lit));
  Ideal ideal = ideal_generate(*parent, gens);
  if (!parent->is_table()) return integer_quotient(std::move(spec), parent, ideal.generator(), options);
  return table_quotient(std::move(spec), parent, ideal);
}

}  // namespace

const std::vector<Ideal>& Ring::ideals() const {
  std::call_once(ideals_once_, [this] { ideals_ = enumerate_ideals(*this); });
  return ideals_;
}

RingPtr build_ring(const RingSpec& spec, const BuildOptions& options) {
  switch (spec.kind) {
    case RingSpec::Kind::Integers:
      return RingBuilder::integers(spec);
    case RingSpec::Kind::Zn:
      return build_cyclic(spec, spec.n, options);
    case RingSpec::Kind::Mat:
      return build_matrix(spec, false, options);
    case RingSpec::Kind::Tri:
      return build_matrix(spec, true, options);
    case RingSpec::Kind::Prod:
      return build_product(spec, options);
    case RingSpec::Kind::Quot:
      return build_quotient(spec, options);
  }
  throw DomainError("unknown ring constructor");
}

RingPtr integers() { return RingBuilder::integers(RingSpec::integers()); }

bool same_ring(const Ring& a, const Ring& b) { return &a == &b || a.spec() == b.spec(); }

Index table_index(const Ring& ring, const Element& e) {
  if (!ring.is_table()) throw DomainError("expected an element of a table ring");
  const Index* idx = std::get_if<Index>(&e);
  if (idx == nullptr || *idx >= ring.size())
    throw DomainError("element index out of range");
  return *idx;
}

const Integer& integer_value(const Ring& ring, const Element& e) {
  const Integer* v = std::get_if<Integer>(&e);
  if (ring.is_table() || v == nullptr) throw DomainError("expected an integer element");
  return *v;
}

Element ring_arithmetic(const Ring& ring, RingOp op, const Element& a, const std::optional<Element>& b) {
  if (op != RingOp::Neg && !b) throw DomainError("binary operation needs two operands");
  if (ring.is_table()) {
    Index x = table_index(ring, a);
    switch (op) {
      case RingOp::Neg:
        return ring.neg(x);
      case RingOp::Add:
        return ring.add(x, table_index(ring, *b));
      case RingOp::Mul:
        return ring.mul(x, table_index(ring, *b));
    }
  }
  const Integer& x = integer_value(ring, a);
  switch (op) {
    case RingOp::Neg:
      return Integer(-x);
    case RingOp::Add:
      return Integer(x + integer_value(ring, *b));
    case RingOp::Mul:
      return Integer(x * integer_value(ring, *b));
  }
  throw DomainError("unknown operation");
}

Index Quotient::project(const Element& x) const {
  if (parent->is_table()) return projection.at(table_index(*parent, x));
  Integer r = integer_value(*parent, x) % modulus;
  if (r < 0) r += modulus;
  return static_cast<Index>(r);
}

Quotient quotient_ring(const RingPtr& ring, const Ideal& ideal, const BuildOptions& options) {
  Quotient q;
  q.parent = ring;
  if (!ring->is_table()) {
    IdealLiteral lit;
    lit.generators.push_back(integer_literal(Integer(ideal.generator())));
    q.modulus = ideal.generator();
    q.ring = integer_quotient(RingSpec::quot(ring->spec(), lit), ring, ideal.generator(), options);
    return q;
  }
  if (is_whole(*ring, ideal)) throw DomainError("quotient by the whole ring is the zero ring");
  IdealLiteral lit;
  auto gens = canonical_generators(*ring, ideal, zero_ideal(*ring));
  if (gens.empty()) gens.push_back(ring->zero());
  for (Index g : gens) lit.generators.push_back(element_to_literal(*ring, g));
  q.ring = table_quotient(RingSpec::quot(ring->spec(), lit), ring, ideal);
  q.projection = q.ring->layout().projection;
  return q;
}

Element element_from_literal(const Ring& ring, const ElementLiteral& lit) {
  auto fail = [&](const std::string& what) -> LiteralError { return LiteralError(what, lit.span); };
  if (!ring.is_table()) {
    if (lit.kind != ElementLiteral::Kind::Integer) throw fail("expected an integer");
    return lit.value;
  }
  const Layout& layout = ring.layout();
  switch (layout.kind) {
    case Layout::Kind::Cyclic: {
      if (lit.kind != ElementLiteral::Kind::Integer) throw fail("expected an integer residue");
      Integer r = lit.value % ring.size();
      if (r < 0) r += ring.size();
      return static_cast<Index>(r);
    }
    case Layout::Kind::Quotient: {
      if (layout.modulus != 0) {
        if (lit.kind != ElementLiteral::Kind::Integer) throw fail("expected an integer residue");
        Integer r = lit.value % layout.modulus;
        if (r < 0) r += layout.modulus;
        return static_cast<Index>(r);
      }
      Index x = std::get<Index>(element_from_literal(*layout.parts[0], lit));
      return layout.projection[x];
    }
    case Layout::Kind::Matrix:
    case Layout::Kind::Triangular: {
      const std::size_t k = layout.dim;
      const Ring& base = *layout.parts[0];
      if (lit.kind != ElementLiteral::Kind::List || lit.items.size() != k)
        throw fail("expected a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
      std::vector<Index> dense(k * k);
      for (std::size_t i = 0; i < k; ++i) {
        const auto& row = lit.items[i];
        if (row.kind != ElementLiteral::Kind::List || row.items.size() != k)
          throw LiteralError("expected a row of " + std::to_string(k) + " entries", row.span);
        for (std::size_t j = 0; j < k; ++j) dense[i * k + j] = std::get<Index>(element_from_literal(base, row.items[j]));
      }
      if (layout.kind == Layout::Kind::Triangular) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < i; ++j)
            if (dense[i * k + j] != base.zero())
              throw LiteralError("entries below the diagonal must be zero", lit.items[i].items[j].span);
      }
      std::vector<Index> flat;
      for (auto [i, j] : layout.positions) flat.push_back(dense[i * k + j]);
      return encode(flat, base.size());
    }
    case Layout::Kind::Product: {
      if (lit.kind != ElementLiteral::Kind::Tuple || lit.items.size() != layout.parts.size())
        throw fail("expected a tuple of " + std::to_string(layout.parts.size()) + " components");
      std::size_t code = 0;
      for (std::size_t i = 0; i < layout.parts.size(); ++i) {
        Index c = std::get<Index>(element_from_literal(*layout.parts[i], lit.items[i]));
        code = code * layout.parts[i]->size() + c;
      }
      return static_cast<Index>(code);
    }
  }
  throw fail("unsupported ring layout");
}

ElementLiteral element_to_literal(const Ring& ring, const Element& e) {
  if (!ring.is_table()) return integer_literal(integer_value(ring, e));
  Index x = table_index(ring, e);
  const Layout& layout = ring.layout();
  switch (layout.kind) {
    case Layout::Kind::Cyclic:
      return integer_literal(Integer(x));
    case Layout::Kind::Quotient:
      if (layout.modulus != 0) return integer_literal(Integer(x));
      return element_to_literal(*layout.parts[0], layout.representatives[x]);
    case Layout::Kind::Matrix:
    case Layout::Kind::Triangular: {
      const std::size_t k = layout.dim;
      const Ring& base = *layout.parts[0];
      auto flat = decode(x, base.size(), layout.positions.size());
      std::vector<Index> dense(k * k, base.zero());
      for (std::size_t p = 0; p < flat.size(); ++p)
        dense[layout.positions[p].first * k + layout.positions[p].second] = flat[p];
      ElementLiteral m;
      m.kind = ElementLiteral::Kind::List;
      for (std::size_t i = 0; i < k; ++i) {
        ElementLiteral row;
        row.kind = ElementLiteral::Kind::List;
        for (std::size_t j = 0; j < k; ++j) row.items.push_back(element_to_literal(base, dense[i * k + j]));
        m.items.push_back(std::move(row));
      }
      return m;
    }
    case Layout::Kind::Product: {
      ElementLiteral t;
      t.kind = ElementLiteral::Kind::Tuple;
      std::vector<Index> comps(layout.parts.size());
      Index rest = x;
      for (std::size_t i = layout.parts.size(); i-- > 0;) {
        comps[i] = static_cast<Index>(rest % layout.parts[i]->size());
        rest = static_cast<Index>(rest / layout.parts[i]->size());
      }
      for (std::size_t i = 0; i < comps.size(); ++i) t.items.push_back(element_to_literal(*layout.parts[i], comps[i]));
      return t;
    }
  }
  throw DomainError("unsupported ring layout");
}

std::optional<std::string> verify_axioms(const Ring& r, std::size_t exhaustive_limit, std::size_t samples,
                                         std::uint64_t seed) {
  if (!r.is_table()) return std::nullopt;
  const auto n = static_cast<Index>(r.size());
  const Index z = r.zero(), u = r.one();
  if (z == u) return "0 equals 1";
  for (Index a = 0; a < n; ++a) {
    if (r.add(a, z) != a || r.add(z, a) != a) return "zero is not an additive identity";
    if (r.add(a, r.neg(a)) != z) return "negation table is not an additive inverse";
    if (r.mul(a, u) != a || r.mul(u, a) != a) return "one is not a multiplicative identity";
    for (Index b = 0; b < n; ++b)
      if (r.add(a, b) != r.add(b, a)) return "addition is not commutative";
  }
  auto triple = [&](Index a, Index b, Index c) -> std::optional<std::string> {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "addition is not associative";
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplication is not associative";
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "left distributivity fails";
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return "right distributivity fails";
    return std::nullopt;
  };
  if (n <= exhaustive_limit) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (auto err = triple(a, b, c)) return err;
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s)
    if (auto err = triple(pick(rng), pick(rng), pick(rng))) return err;
  return std::nullopt;
}

}  // namespace fuzzideal
