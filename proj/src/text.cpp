#include "hdx/text.hpp"

#include <cctype>
#include <limits>

namespace hdx {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  std::size_t pos() const { return pos_; }

  /// Unsigned decimal integer; the digits must be adjacent.
  BigInt number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }
  unsigned long small_number(unsigned long limit, const char* what) {
    const std::size_t start = (skip_ws(), pos_);
    BigInt v = number();
    if (v > limit) throw ParseError(std::string(what) + " " + v.get_str() + " is too large", start);
    return v.get_ui();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

constexpr unsigned long kMaxVariables = 1UL << 20;
constexpr unsigned long kMaxExponent = std::numeric_limits<std::uint32_t>::max();

std::size_t parse_ring_size(Cursor& c) {
  if (!c.accept_word("n")) c.fail("expected 'n='");
  c.expect('=');
  const std::size_t at = c.pos();
  const auto n = c.small_number(kMaxVariables, "ring size");
  if (n == 0) throw ParseError("ring size must be positive", at);
  return n;
}

Monomial parse_monomial(Cursor& c, std::size_t n) {
  const std::size_t start = (c.skip_ws(), c.pos());
  if (c.peek() == '1') {
    c.number();
    throw ParseError("generator 1 makes the ideal improper", start);
  }
  Monomial u = Monomial::one(n);
  do {
    if (!c.accept('x')) c.fail("expected a variable x<k>");
    const std::size_t at = c.pos();
    const auto k = c.small_number(kMaxVariables, "variable index");
    if (k < 1 || k > n)
      throw ParseError("variable x" + std::to_string(k) + " is outside x1..x" + std::to_string(n), at);
    unsigned long e = 1;
    if (c.accept('^')) e = c.small_number(kMaxExponent, "exponent");
    const unsigned long total = u.exp(k) + e;
    if (total > kMaxExponent) throw ParseError("exponent is too large", at);
    u.set_exp(k, static_cast<std::uint32_t>(total));
  } while (c.accept('*'));
  if (u.is_one()) throw ParseError("generator 1 makes the ideal improper", start);
  return u;
}

IntPolynomial parse_terms(Cursor& c) {
  IntPolynomial out;
  bool first = true;
  while (true) {
    int sign = 1;
    if (c.accept('-')) sign = -1;
    else if (!c.accept('+') && !first) break;
    first = false;

    BigInt coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = c.number();
      have_coef = true;
      c.accept('*');
    }
    std::size_t k = 0;
    if (c.accept('t')) {
      k = 1;
      if (c.accept('^')) k = c.small_number(1UL << 24, "degree");
    } else if (!have_coef) {
      c.fail("expected a term");
    }
    out += IntPolynomial::monomial(coef * sign, k);
    if (c.done()) break;
    const char next = c.peek();
    if (next != '+' && next != '-') break;
  }
  return out;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  Cursor c(text);
  const std::size_t n = parse_ring_size(c);
  c.expect(';');
  std::vector<Monomial> gens;
  do gens.push_back(parse_monomial(c, n));
  while (c.accept(','));
  if (!c.done()) c.fail("unexpected text after the generators");
  return MonomialIdeal::from_generators(n, std::move(gens));
}

HilbertSeries parse_series(std::string_view text) {
  Cursor c(text);
  if (!c.accept_word("series")) c.fail("expected 'series'");
  c.expect(';');
  const std::size_t n = parse_ring_size(c);
  c.expect(';');
  IntPolynomial q = parse_terms(c);
  if (!c.done()) c.fail("unexpected text after the numerator");
  return {std::move(q), n};
}

IntPolynomial parse_polynomial(std::string_view text) {
  Cursor c(text);
  IntPolynomial p = parse_terms(c);
  if (!c.done()) c.fail("unexpected text after the polynomial");
  return p;
}

bool looks_like_series(std::string_view text) {
  Cursor c(text);
  return c.accept_word("series");
}

}  // namespace hdx
