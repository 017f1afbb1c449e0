#include "polyred/rings/parse.hpp"

#include "polyred/error.hpp"

#include <cctype>
#include <string>

namespace polyred {

namespace {

// Recursive-descent parser over sums/products of integers and one symbol.
template <class T>
class ElementParser {
 public:
  ElementParser(std::string_view text, char symbol, T symbol_value)
      : text_(text), symbol_(symbol), symbol_value_(std::move(symbol_value)) {}

  T parse() {
    T v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "'" + std::string(text_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_with(std::string_view word) {
    skip_ws();
    return text_.substr(pos_, word.size()) == word;
  }

  T expr() {
    T acc{};
    bool first = true;
    for (;;) {
      int sign = 1;
      if (eat('-')) {
        sign = -1;
      } else if (!eat('+') && !first) {
        break;
      }
      T t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }

  T term() {
    T v = factor();
    while (eat('*')) v = v * factor();
    return v;
  }

  Integer digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  T factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (eat('(')) {
      T v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (symbol_ == 't' && starts_with("sqrt5")) {
      pos_ += 5;
      return T(-1) + T(2) * symbol_value_;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = digits();
      // implicit product "2t"
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == symbol_) return T(n) * factor();
      return T(n);
    }
    if (c == symbol_) {
      ++pos_;
      unsigned power = 1;
      bool caret = eat('^');
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        power = static_cast<unsigned>(digits());
      } else if (caret) {
        fail("expected exponent");
      }
      T v(1);
      for (unsigned k = 0; k < power; ++k) v = v * symbol_value_;
      return v;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  char symbol_;
  T symbol_value_;
};

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  try {
    std::size_t used = 0;
    std::string str(s);
    long long v = std::stoll(str, &used);
    if (used != str.size()) throw std::invalid_argument("junk");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad integer in '" + std::string(whole) + "'");
  }
}

}  // namespace

QuadInt parse_quadint(std::string_view text) {
  return ElementParser<QuadInt>(text, 't', QuadInt::tau()).parse();
}

GaussInt parse_gaussint(std::string_view text) {
  return ElementParser<GaussInt>(text, 'i', GaussInt::i()).parse();
}

GaussIdeal parse_ideal(std::string_view text) {
  if (text.rfind("full:", 0) == 0) {
    return GaussIdeal::full(parse_int(text.substr(5), text));
  }
  if (text.rfind("principal:", 0) == 0) {
    std::string_view rest = text.substr(10);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorKind::Parse, "'" + std::string(text) + "'");
    return GaussIdeal::principal(parse_int(rest.substr(0, comma), text),
                                 parse_int(rest.substr(comma + 1), text));
  }
  throw Error(ErrorKind::Parse, "ideal must be full:m or principal:b,c, got '" + std::string(text) + "'");
}

}  // namespace polyred
