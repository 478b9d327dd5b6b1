#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzideal/fuzzy.hpp"
#include "fuzzideal/grid.hpp"

namespace fuzzideal {

enum class Notion { D0, D0Prime, D1, D1L, D1R, D2, D3, D4, PrimeNew, SD0Prime, SD1, SD2, SD4, SemiprimeNew };

inline constexpr std::array kAllNotions = {
    Notion::D0,       Notion::D0Prime, Notion::D1,  Notion::D1L, Notion::D1R,
    Notion::D2,       Notion::D3,      Notion::D4,  Notion::PrimeNew, Notion::SD0Prime,
    Notion::SD1,      Notion::SD2,     Notion::SD4, Notion::SemiprimeNew};

/// "D0", "D0'", ..., "PRIME_NEW", "SEMIPRIME_NEW".
std::string_view notion_name(Notion n);
std::optional<Notion> notion_from_name(std::string_view name);
/// D0, D0', SD0' and SD1 quantify over fuzzy products and need a table ring.
bool notion_supported(const Ring& ring, Notion n);

/// Counterexample to a notion. Which fields are filled depends on `reason`;
/// every witness can be re-checked with a single evaluation of P.
struct Witness {
  std::string reason;
  std::vector<Element> elements;
  std::vector<Value> values;
  std::vector<Ideal> ideals;
  std::vector<FuzzyIdeal> fuzzy;
};

// Each *_violation returns nullopt when P has the property and throws
// ConstantIdealError for constant P. Grid-quantified notions default to
// ValueGrid::for_ideal(P).

std::optional<Witness> prime_new_violation(const FuzzyIdeal& p);
std::optional<Witness> d2_violation(const FuzzyIdeal& p);
std::optional<Witness> d3_violation(const FuzzyIdeal& p);
std::optional<Witness> d4_violation(const FuzzyIdeal& p);
/// Decided by the two-valued characterization (top value 1, prime top cut);
/// also decides D1', D1L and D1R.
std::optional<Witness> d1_violation(const FuzzyIdeal& p);
/// Singleton product read as x_t y_s = (xy)_{t ^ s}.
std::optional<Witness> d0_violation(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid = {});
std::optional<Witness> d0prime_violation(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid = {});
std::optional<Witness> semiprime_new_violation(const FuzzyIdeal& p);
std::optional<Witness> sd2_violation(const FuzzyIdeal& p);
std::optional<Witness> sd4_violation(const FuzzyIdeal& p);
std::optional<Witness> sd1_violation(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid = {});
std::optional<Witness> sd0prime_violation(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid = {});

inline bool is_prime_new(const FuzzyIdeal& p) { return !prime_new_violation(p); }
inline bool is_D2(const FuzzyIdeal& p) { return !d2_violation(p); }
inline bool is_D3(const FuzzyIdeal& p) { return !d3_violation(p); }
inline bool is_D4(const FuzzyIdeal& p) { return !d4_violation(p); }
inline bool is_D1(const FuzzyIdeal& p) { return !d1_violation(p); }
inline bool is_D0(const FuzzyIdeal& p) { return !d0_violation(p); }
inline bool is_D0prime(const FuzzyIdeal& p) { return !d0prime_violation(p); }
inline bool is_semiprime_new(const FuzzyIdeal& p) { return !semiprime_new_violation(p); }
inline bool is_SD2(const FuzzyIdeal& p) { return !sd2_violation(p); }
inline bool is_SD4(const FuzzyIdeal& p) { return !sd4_violation(p); }
inline bool is_SD1(const FuzzyIdeal& p) { return !sd1_violation(p); }
inline bool is_SD0prime(const FuzzyIdeal& p) { return !sd0prime_violation(p); }

/// Every proper cut completely prime (resp. completely semiprime).
bool completely_prime_cuts(const FuzzyIdeal& p);
bool completely_semiprime_cuts(const FuzzyIdeal& p);

/// Pointwise IJ <= P, evaluated cut-wise as I_a J_a <= P_a. Table rings.
bool product_leq(const FuzzyIdeal& i, const FuzzyIdeal& j, const FuzzyIdeal& p);

struct D1Search {
  std::optional<std::pair<FuzzyIdeal, FuzzyIdeal>> witness;
  bool exhausted = false;  // budget ran out before the family was covered
  std::size_t pairs_checked = 0;
};

/// Searches grid-valued pairs I, J with I o J <= P, I !<= P, J !<= P.
D1Search d1_falsify_search(const FuzzyIdeal& p, const ValueGrid& grid, std::size_t budget);

struct ClassificationReport {
  bool commutative = false;
  std::map<Notion, bool> notions;
  std::map<Notion, Witness> witnesses;
  std::vector<Notion> unsupported;
};

ClassificationReport classify(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid = {});

struct CharprimeReport {
  bool prime_new = false;         // (a)
  bool prime_cuts = false;        // (b)
  bool prime_quotients = false;   // (c)
  bool ideal_test = false;        // (d), grid-quantified
  std::optional<bool> d4;         // commutative rings only
};

/// Evaluates the four characterizations of primeness by independent routes
/// and throws CheckFailure naming the divergent pair if they disagree.
CharprimeReport charprime_equivalence_check(const FuzzyIdeal& p, const std::optional<ValueGrid>& grid = {});

struct DiagramEdge {
  std::string edge;    // "A -> B" or "A <-> B"
  std::string status;  // "implied" or "counterexample"
  bool asserted = false;
  std::optional<std::size_t> corpus_index;  // first counterexample
  std::optional<FuzzyIdeal> example;
};

struct DiagramReport {
  std::size_t corpus_size = 0;
  bool commutative = false;
  std::vector<DiagramEdge> edges;

  std::vector<const DiagramEdge*> violations() const;
};

/// Classifies every corpus item (on `jobs` worker threads) and evaluates
/// each implication between notions. Asserted edges that fail are reported
/// as violations rather than thrown.
DiagramReport diagram_check(std::span<const FuzzyIdeal> corpus, unsigned jobs = 1);

/// Two-valued Q(0) on a minimal crisp prime inside Q_*, Q(1) elsewhere.
/// Throws DomainError if Q is not prime, CheckFailure if the result fails
/// its postcondition.
FuzzyIdeal minimal_prime_below(const FuzzyIdeal& q);
std::size_t count_minimal_prime_classes(const Ring& ring);

struct BridgeResult {
  bool ring_property = false;
  bool all_zero_type = false;
};
/// Prime ring vs. every grid zero-type ideal prime.
BridgeResult prime_ring_bridge(const RingPtr& ring, const ValueGrid& grid);
/// Semiprime ring vs. every grid zero-type ideal semiprime.
BridgeResult semiprime_ring_bridge(const RingPtr& ring, const ValueGrid& grid);

}  // namespace fuzzideal
