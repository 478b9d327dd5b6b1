#include "fuzzideal/value.hpp"

#include "fuzzideal/errors.hpp"

namespace fuzzideal {

Value::Value(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw DomainError("membership value " + std::to_string(num) + "/" + std::to_string(den) +
                      " is not in [0, 1]");
  }
  q_.assign(num, den);
}

Value Value::midpoint(const Value& a, const Value& b) {
  return Value((a.q_ + b.q_) / std::int64_t{2});
}

std::string Value::str() const {
  if (q_.denominator() == 1) return std::to_string(q_.numerator());
  return std::to_string(q_.numerator()) + "/" + std::to_string(q_.denominator());
}

}  // namespace fuzzideal
