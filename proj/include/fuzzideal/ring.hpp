#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fuzzideal/element_set.hpp"
#include "fuzzideal/errors.hpp"
#include "fuzzideal/ideal.hpp"
#include "fuzzideal/ring_spec.hpp"

namespace fuzzideal {

enum class Backend { Table, Integers };

/// A ring element: an index for table rings, an integer for Z.
using Element = std::variant<Index, Integer>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// How the elements of a table ring are laid out in terms of the rings it
/// was built from. Drives element (de)serialization and nothing else.
struct Layout {
  enum class Kind { Cyclic, Matrix, Triangular, Product, Quotient };

  Kind kind = Kind::Cyclic;
  std::size_t dim = 0;                              // Matrix, Triangular
  std::vector<RingPtr> parts;                       // bases; the parent for Quotient
  std::vector<std::pair<std::size_t, std::size_t>> positions;  // matrix entries, row-major
  std::vector<Index> representatives;               // Quotient of a table ring
  std::vector<Index> projection;                    // Quotient of a table ring
  std::uint64_t modulus = 0;                        // Quotient of Z
};

/// A unital ring: a finite ring given by operation tables, or the integers.
///
/// Rings are immutable after construction and shared through RingPtr.
/// Table element order is canonical (see build_ring), so equal specs give
/// identical tables.
class Ring {
 public:
  Backend backend() const { return backend_; }
  bool is_table() const { return backend_ == Backend::Table; }
  const RingSpec& spec() const { return spec_; }
  bool is_commutative() const { return commutative_; }

  // Table backend only.
  std::size_t size() const { return size_; }
  Index zero() const { return zero_; }
  Index one() const { return one_; }
  Index add(Index a, Index b) const { return add_[a * size_ + b]; }
  Index mul(Index a, Index b) const { return mul_[a * size_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  const Layout& layout() const { return layout_; }
  /// A small generating set of (R, +), chosen greedily in canonical order.
  std::span<const Index> additive_generators() const { return additive_generators_; }

  /// All two-sided ideals in canonical order, computed once per ring.
  const std::vector<Ideal>& ideals() const;

 private:
  friend class RingBuilder;
  Ring() = default;

  Backend backend_ = Backend::Integers;
  RingSpec spec_;
  bool commutative_ = true;
  std::size_t size_ = 0;
  Index zero_ = 0;
  Index one_ = 0;
  std::vector<std::uint16_t> add_, mul_, neg_;
  Layout layout_;
  std::vector<Index> additive_generators_;

  mutable std::once_flag ideals_once_;
  mutable std::vector<Ideal> ideals_;
};

struct BuildOptions {
  std::size_t size_limit = 4096;
};

/// Instantiate a ring specification.
///
/// Canonical element order: residues ascending for Zn; matrices in
/// row-major lexicographic order of their entries; product tuples
/// lexicographically; quotient cosets by their minimal representative.
/// Throws DomainError for invalid specs and ResourceError when the table
/// would exceed options.size_limit elements.
RingPtr build_ring(const RingSpec& spec, const BuildOptions& options = {});

/// The integer ring Z.
RingPtr integers();

/// True when both handles denote the same ring (same object or same spec).
bool same_ring(const Ring& a, const Ring& b);

enum class RingOp { Add, Mul, Neg };

/// Evaluate one ring operation; b is ignored for Neg and required otherwise.
Element ring_arithmetic(const Ring& ring, RingOp op, const Element& a,
                        const std::optional<Element>& b = std::nullopt);

/// Validates that e denotes an element of ring and returns its table index.
Index table_index(const Ring& ring, const Element& e);

/// The integer value of an element of Z.
const Integer& integer_value(const Ring& ring, const Element& e);

/// R/I with the natural projection.
struct Quotient {
  RingPtr ring;
  RingPtr parent;
  std::vector<Index> projection;  // table parents: parent index -> coset index
  std::uint64_t modulus = 0;      // integer parent

  Index project(const Element& x) const;
};

/// Throws DomainError when I is the whole ring (the zero ring is not
/// admitted) or when I is the zero ideal of Z.
Quotient quotient_ring(const RingPtr& ring, const Ideal& ideal, const BuildOptions& options = {});

/// Raised by element_from_literal; carries the span of the offending literal.
class LiteralError : public DomainError {
 public:
  LiteralError(const std::string& what, SourceSpan span) : DomainError(what), span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

/// Type an element literal against a ring (entries of Zn are reduced mod n).
Element element_from_literal(const Ring& ring, const ElementLiteral& literal);

/// Inverse of element_from_literal, producing the canonical literal.
ElementLiteral element_to_literal(const Ring& ring, const Element& e);

/// Checks the ring axioms on the tables: exhaustively for rings of at most
/// `exhaustive_limit` elements, otherwise on `samples` random triples drawn
/// from a generator seeded with `seed`. Returns a description of the first
/// violation, if any.
std::optional<std::string> verify_axioms(const Ring& ring, std::size_t exhaustive_limit = 64,
                                         std::size_t samples = 10'000, std::uint64_t seed = 1);

}  // namespace fuzzideal
