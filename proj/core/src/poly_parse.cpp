#include <cctype>

#include "cpt/error.hpp"
#include "cpt/poly.hpp"

namespace cpt {

namespace {

// Recursive-descent parser:
//   expr   := [+|-] term { (+|-) term }
//   term   := factor { [*] factor }
//   factor := (integer | generator | '(' expr ')') [ '^' integer ]
class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t ngens)
      : text_(text), ngens_(ngens), names_(default_generator_names(ngens)) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  Poly expr() {
    Poly acc(ngens_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    Poly t = term();
    acc += negate ? -t : t;
    while (peek('+') || peek('-')) {
      negate = text_[pos_++] == '-';
      t = term();
      acc += negate ? -t : t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a term");
    Poly base(ngens_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Poly::constant(ngens_, integer());
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      base = Poly::generator(ngens_, generator_index());
    } else {
      fail("expected a term");
    }
    if (peek('^')) {
      ++pos_;
      skip_space();
      Integer e = integer();
      if (e < 0 || e > 4096) fail("exponent out of range");
      base = base.pow(e.convert_to<unsigned>());
    }
    return base;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return parse_integer(text_.substr(start, pos_ - start));
  }

  std::size_t generator_index() {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
    // x<k> addresses generator k directly.
    if (c == 'x' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      Integer k = integer();
      if (k < 1 || k > Integer(ngens_)) fail("generator index out of range");
      return k.convert_to<std::size_t>() - 1;
    }
    for (std::size_t k = 0; k < names_.size(); ++k) {
      if (names_[k].size() == 1 && names_[k][0] == c) {
        ++pos_;
        return k;
      }
    }
    fail(std::string("unknown generator '") + text_[pos_] + "'");
  }

  std::string_view text_;
  std::size_t ngens_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t ngens) { return PolyParser(text, ngens).parse(); }

}  // namespace cpt
