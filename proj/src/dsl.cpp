#include "fuzzideal/dsl.hpp"

#include <cctype>

#include "fuzzideal/ideals.hpp"

namespace fuzzideal {

ParseError::ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected)
    : Error(message + " at offset " + std::to_string(span.start)),
      message_(message),
      span_(span),
      expected_(std::move(expected)) {}

namespace {

constexpr std::size_t kMaxDigits = 18;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) unexpected({std::string("'") + c + "'"});
  }

  [[noreturn]] void unexpected(std::vector<std::string> expected) {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", {text_.size(), text_.size()}, expected);
    throw ParseError(std::string("unexpected '") + text_[pos_] + "'", {pos_, pos_ + 1}, expected);
  }

  // Trailing input is reported as one span up to its last non-space character.
  void finish() {
    if (pos() >= text_.size()) return;
    std::size_t end = text_.find_last_not_of(" \t\n\r") + 1;
    throw ParseError("unexpected trailing input '" + std::string(text_.substr(pos_, end - pos_)) + "'", {pos_, end},
                     {"end of input"});
  }

  // Maximal run of digits; empty when none.
  std::string_view digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t nat(std::string_view what) {
    std::size_t start = pos();
    auto d = digits();
    if (d.empty()) unexpected({what.empty() ? "natural number" : std::string(what)});
    if (d.size() > kMaxDigits) throw ParseError("number too large", {start, pos_}, {"natural number"});
    return std::stoull(std::string(d));
  }

  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  RingSpec ring_spec() {
    std::size_t start = pos();
    auto name = word();
    RingSpec spec;
    if (name == "Z") {
      spec = RingSpec::integers();
    } else if (name == "Zn") {
      expect('(');
      std::size_t at = pos();
      std::uint64_t n = nat("modulus");
      if (n < 2) throw ParseError("Zn needs a modulus of at least 2", {at, pos_}, {"modulus >= 2"});
      expect(')');
      spec = RingSpec::zn(n);
    } else if (name == "Mat" || name == "Tri") {
      expect('(');
      std::size_t at = pos();
      std::uint64_t k = nat("dimension");
      if (k < 1) throw ParseError(std::string(name) + " needs a dimension of at least 1", {at, pos_}, {"dimension >= 1"});
      expect(',');
      RingSpec base = ring_spec();
      expect(')');
      spec = name == "Mat" ? RingSpec::mat(k, std::move(base)) : RingSpec::tri(k, std::move(base));
    } else if (name == "Prod") {
      expect('(');
      std::vector<RingSpec> factors;
      factors.push_back(ring_spec());
      expect(',');
      factors.push_back(ring_spec());
      while (accept(',')) factors.push_back(ring_spec());
      expect(')');
      spec = RingSpec::prod(std::move(factors));
    } else if (name == "Quot") {
      expect('(');
      RingSpec base = ring_spec();
      expect(',');
      IdealLiteral ideal = ideal_spec();
      expect(')');
      spec = RingSpec::quot(std::move(base), std::move(ideal));
    } else {
      static const std::vector<std::string> kConstructors = {"'Z'", "'Zn'", "'Mat'", "'Tri'", "'Prod'", "'Quot'"};
      if (name.empty()) unexpected(kConstructors);
      throw ParseError("unknown ring constructor '" + std::string(name) + "'", {start, pos_}, kConstructors);
    }
    spec.span = {start, pos_};
    return spec;
  }

  ElementLiteral element() {
    std::size_t start = pos();
    ElementLiteral lit;
    if (accept('[')) {
      lit.kind = ElementLiteral::Kind::List;
      do lit.items.push_back(element());
      while (accept(','));
      expect(']');
    } else if (accept('(')) {
      lit.kind = ElementLiteral::Kind::Tuple;
      lit.items.push_back(element());
      expect(',');
      do lit.items.push_back(element());
      while (accept(','));
      expect(')');
    } else {
      bool negative = accept('-');
      auto d = digits();
      if (d.empty()) unexpected(negative ? std::vector<std::string>{"digit"}
                                         : std::vector<std::string>{"integer", "'['", "'('"});
      lit.value = Integer(std::string(d));
      if (negative) lit.value = -lit.value;
    }
    lit.span = {start, pos_};
    return lit;
  }

  IdealLiteral ideal_spec() {
    std::size_t start = pos();
    IdealLiteral ideal;
    expect('<');
    if (accept('*')) {
      ideal.whole = true;
    } else if (!peek('>')) {
      do ideal.generators.push_back(element());
      while (accept(','));
    }
    expect('>');
    ideal.span = {start, pos_};
    return ideal;
  }

  Value value() {
    static const std::vector<std::string> kExpected = {"value in [0, 1]"};
    std::size_t start = pos();
    auto whole = digits();
    if (whole.empty()) unexpected(kExpected);
    auto too_long = [&] { throw ParseError("number too large", {start, pos_}, kExpected); };
    if (whole.size() > kMaxDigits) too_long();
    std::int64_t num = std::stoll(std::string(whole));
    std::int64_t den = 1;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t frac_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t k = pos_ - frac_start;
      if (k == 0) unexpected({"digit"});
      if (k > 6) throw ParseError("at most six fraction digits are allowed", {start, pos_}, kExpected);
      if (whole.size() > 6) too_long();
      for (std::size_t i = 0; i < k; ++i) den *= 10;
      num = num * den + std::stoll(std::string(text_.substr(frac_start, k)));
    } else if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) unexpected({"denominator"});
      auto d = digits();
      if (d.size() > kMaxDigits) too_long();
      den = std::stoll(std::string(d));
      if (den == 0) throw ParseError("zero denominator", {start, pos_}, kExpected);
      if (den > Value::kMaxDenominator)
        throw ParseError("denominator exceeds 1000000", {start, pos_}, kExpected);
    }
    if (num > den) throw ParseError("value outside [0, 1]", {start, pos_}, kExpected);
    return Value(num, den);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Element typed_element(const Ring& ring, const ElementLiteral& lit) {
  try {
    return element_from_literal(ring, lit);
  } catch (const LiteralError& e) {
    throw ParseError(e.what(), e.span(), {"element of " + format(ring.spec())});
  }
}

template <class T>
std::string join(const std::vector<T>& items, auto&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += fmt(items[i]);
  }
  return out;
}

std::string format(const IdealLiteral& ideal) {
  if (ideal.whole) return "<*>";
  return "<" + join(ideal.generators, [](const ElementLiteral& e) { return format(e); }) + ">";
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  Parser p(text);
  RingSpec spec = p.ring_spec();
  p.finish();
  return spec;
}

ElementLiteral parse_element_literal(std::string_view text) {
  Parser p(text);
  ElementLiteral lit = p.element();
  p.finish();
  return lit;
}

Element parse_element(const Ring& ring, std::string_view text) {
  return typed_element(ring, parse_element_literal(text));
}

Value parse_value(std::string_view text) {
  Parser p(text);
  Value v = p.value();
  p.finish();
  return v;
}

std::vector<Value> parse_value_list(std::string_view text) {
  Parser p(text);
  std::vector<Value> out;
  do out.push_back(p.value());
  while (p.accept(','));
  p.finish();
  return out;
}

FuzzyIdeal parse_fuzzy_spec(const RingPtr& ring, std::string_view text) {
  struct RawLevel {
    Value value;
    SourceSpan value_span;
    IdealLiteral ideal;
  };
  Parser p(text);
  std::vector<RawLevel> raw;
  p.expect('{');
  do {
    std::size_t start = p.pos();
    Value v = p.value();
    SourceSpan span{start, p.pos()};
    p.expect(':');
    raw.push_back({v, span, p.ideal_spec()});
  } while (p.accept(','));
  p.expect('}');
  p.finish();

  const Ring& r = *ring;
  std::vector<Element> gens;
  std::vector<Level> levels;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    const auto& level = raw[j];
    if (j > 0 && !(level.value < levels.back().value))
      throw ChainError("level " + std::to_string(j + 1) + ": values must strictly decrease", j + 1, level.value_span);
    Ideal c;
    if (level.ideal.whole) {
      c = whole_ideal(r);
    } else {
      for (const auto& g : level.ideal.generators) gens.push_back(typed_element(r, g));
      c = ideal_generate(r, gens);
    }
    if (j > 0 && c == levels.back().ideal)
      throw ChainError("level " + std::to_string(j + 1) + " adds no elements to the previous level", j + 1,
                       level.ideal.span);
    levels.push_back({std::move(c), level.value});
  }
  if (!is_whole(r, levels.back().ideal))
    throw ChainError("the last level must be the whole ring", raw.size(), raw.back().ideal.span);
  return FuzzyIdeal(ring, std::move(levels));
}

std::string format(const RingSpec& spec) {
  using K = RingSpec::Kind;
  switch (spec.kind) {
    case K::Integers: return "Z";
    case K::Zn: return "Zn(" + std::to_string(spec.n) + ")";
    case K::Mat: return "Mat(" + std::to_string(spec.n) + ", " + format(spec.children[0]) + ")";
    case K::Tri: return "Tri(" + std::to_string(spec.n) + ", " + format(spec.children[0]) + ")";
    case K::Prod: return "Prod(" + join(spec.children, [](const RingSpec& s) { return format(s); }) + ")";
    case K::Quot: return "Quot(" + format(spec.children[0]) + ", " + format(spec.ideal) + ")";
  }
  return "";
}

std::string format(const ElementLiteral& lit) {
  auto items = [&] { return join(lit.items, [](const ElementLiteral& e) { return format(e); }); };
  switch (lit.kind) {
    case ElementLiteral::Kind::Integer: return lit.value.str();
    case ElementLiteral::Kind::List: return "[" + items() + "]";
    case ElementLiteral::Kind::Tuple: return "(" + items() + ")";
  }
  return "";
}

std::string format_element(const Ring& ring, const Element& x) { return format(element_to_literal(ring, x)); }

namespace {

std::string generator_list(const Ring& ring, const Ideal& ideal, const Ideal& base) {
  if (!ring.is_table()) return "<" + std::to_string(ideal.generator()) + ">";
  auto gens = canonical_generators(ring, ideal, base);
  if (gens.empty()) return "<" + format_element(ring, ring.zero()) + ">";
  return "<" + join(gens, [&](Index g) { return format_element(ring, g); }) + ">";
}

}  // namespace

std::string format_ideal(const Ring& ring, const Ideal& ideal) {
  return generator_list(ring, ideal, zero_ideal(ring));
}

std::string format(const FuzzyIdeal& f) {
  const Ring& r = f.ring();
  auto chain = f.chain();
  std::string out = "{";
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (j) out += ", ";
    out += chain[j].value.str() + ": ";
    if (j + 1 == chain.size())
      out += "<*>";
    else
      out += generator_list(r, chain[j].ideal, j == 0 ? zero_ideal(r) : chain[j - 1].ideal);
  }
  return out + "}";
}

}  // namespace fuzzideal
