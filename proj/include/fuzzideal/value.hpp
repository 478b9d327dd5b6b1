#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fuzzideal {

/// Exact membership degree in [0, 1].
///
/// Values are reduced rationals. Denominators of values entered by users are
/// limited to kMaxDenominator so that midpoints of two such values (the
/// finest values the library ever constructs) stay well inside 64-bit range.
class Value {
 public:
  static constexpr std::int64_t kMaxDenominator = 1'000'000;

  constexpr Value() = default;
  /// Throws DomainError unless 0 <= num/den <= 1 and den > 0.
  Value(std::int64_t num, std::int64_t den = 1);

  static Value zero() { return Value(0); }
  static Value one() { return Value(1); }
  static Value midpoint(const Value& a, const Value& b);

  std::int64_t numerator() const { return q_.numerator(); }
  std::int64_t denominator() const { return q_.denominator(); }

  /// "0", "1" or "p/q".
  std::string str() const;

  friend bool operator==(const Value& a, const Value& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.q_ == b.q_) return std::strong_ordering::equal;
    return a.q_ < b.q_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  explicit Value(boost::rational<std::int64_t> q) : q_(q) {}
  boost::rational<std::int64_t> q_{0};
};

inline const Value& min(const Value& a, const Value& b) { return b < a ? b : a; }
inline const Value& max(const Value& a, const Value& b) { return a < b ? b : a; }

}  // namespace fuzzideal
