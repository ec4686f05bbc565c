#include <cctype>
#include <sstream>

#include "fermat/error.hpp"
#include "fermat/group_ring.hpp"

namespace fermat {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor factor*          (juxtaposition multiplies)
// factor := primary ['^' integer]
// primary:= integer | 'e' | 'f' | '(' expr ')'
class Lambda1Parser {
 public:
  Lambda1Parser(std::uint32_t n, std::string_view text) : n_(n), ring_(CoefficientRing::integers_mod(n)) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  GroupRingElement parse() {
    if (text_.empty()) throw ParseError("empty Λ_1 expression");
    auto result = expr();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  bool starts_primary() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'e' || c == 'f' || c == '(';
  }

  GroupRingElement expr() {
    GroupRingElement acc(ring_, n_, 1);
    bool first = true;
    while (true) {
      bool negate = false;
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      auto t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
      if (peek() != '+' && peek() != '-') break;
    }
    return acc;
  }

  GroupRingElement term() {
    if (!starts_primary()) fail("expected a term");
    auto acc = factor();
    while (starts_primary()) acc = acc * factor();
    return acc;
  }

  GroupRingElement factor() {
    auto base = primary();
    if (peek() == '^') {
      ++pos_;
      base = base.pow(integer());
    }
    return base;
  }

  GroupRingElement primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'e' || c == 'f') {
      ++pos_;
      return GroupRingElement::generator(ring_, n_, 1, c == 'e' ? 0 : 1);
    }
    const auto v = integer();
    return GroupRingElement::one(ring_, n_, 1).scaled(ring_.from_int(static_cast<std::int64_t>(v % n_)));
  }

  std::uint64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::uint64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  std::uint32_t n_;
  CoefficientRing ring_;
  std::string text_;
  std::size_t pos_ = 0;
};

std::string power(char letter, std::uint32_t e) {
  if (e == 0) return "";
  std::string s(1, letter);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

// Residue c in (-n/2, n/2].
std::int64_t signed_rep(Coeff c, std::uint32_t n) {
  const auto v = static_cast<std::int64_t>(c);
  return 2 * v > static_cast<std::int64_t>(n) ? v - n : v;
}

}  // namespace

GroupRingElement parse_lambda1(std::uint32_t n, std::string_view text) { return Lambda1Parser(n, text).parse(); }

std::string format_lambda1(const GroupRingElement& a) {
  if (a.m() != 1) throw ArityMismatch("format_lambda1: needs an element of Λ_1");
  if (a.ring().is_extension()) throw ModulusMismatch("format_lambda1: needs Z/n coefficients");
  std::string out;
  for (std::uint32_t i = 0; i < a.n(); ++i)
    for (std::uint32_t j = 0; j < a.n(); ++j) {
      const auto c = signed_rep(a.at(i, j), a.n());
      if (c == 0) continue;
      const std::string mono = power('e', i) + power('f', j);
      const auto mag = c < 0 ? -c : c;
      if (c < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      if (mag != 1 || mono.empty()) out += std::to_string(mag);
      out += mono;
    }
  return out.empty() ? "0" : out;
}

std::string format_grid(const GroupRingElement& a) {
  if (a.m() != 1) throw ArityMismatch("format_grid: needs an element of Λ_1");
  std::ostringstream os;
  for (std::uint32_t i = 0; i < a.n(); ++i) {
    for (std::uint32_t j = 0; j < a.n(); ++j) {
      const std::string cell = a.ring().is_extension() ? a.ring().to_string(a.at(i, j))
                                                       : std::to_string(signed_rep(a.at(i, j), a.n()));
      os << (j ? " " : "") << std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fermat
