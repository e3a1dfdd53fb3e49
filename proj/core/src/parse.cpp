#include "grt/parse.hpp"

#include <cctype>

namespace grt {

namespace {

class LieParser {
 public:
  LieParser(std::string_view text, AlphabetPtr alphabet)
      : text_(text), alphabet_(std::move(alphabet)) {}

  LieElement parse() {
    LieElement e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character '" + current() + "'");
    return e;
  }

 private:
  std::string current() const {
    return pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("end of input");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c))
      throw ParseError(pos_, std::string("expected '") + c + "', found '" + current() + "'");
    ++pos_;
  }

  LieElement expr() {
    LieElement acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool digit_at(std::size_t p) const {
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  LieElement term() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    if (digit_at(pos_)) {
      std::size_t p = pos_;
      while (digit_at(p)) ++p;
      if (p < text_.size() && text_[p] == '/') {
        ++p;
        if (!digit_at(p)) throw ParseError(p, "expected digits after '/'");
        while (digit_at(p)) ++p;
      }
      Rational q = parse_rational(text_.substr(pos_, p - pos_));
      if (negative) q = -q;
      pos_ = p;
      if (peek('*')) {
        ++pos_;
        return Rational(q) * atom();
      }
      if (q == 0) return LieElement(alphabet_);
      throw ParseError(pos_, "expected '*' after coefficient");
    }
    if (negative) return -atom();
    (void)start;
    return atom();
  }

  LieElement atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      LieElement a = expr();
      expect(',');
      LieElement b = expr();
      expect(']');
      return bracket(a, b);
    }
    if (c == '(') {
      ++pos_;
      LieElement a = expr();
      expect(')');
      return a;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!alphabet_->index_of(name))
        throw Error(ErrorCode::UnknownGenerator,
                    "unknown generator '" + name + "' at position " + std::to_string(start));
      return generator(alphabet_, name);
    }
    throw ParseError(pos_, "unexpected character '" + current() + "'");
  }

  std::string_view text_;
  AlphabetPtr alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

LieElement parse_lie(std::string_view text, const AlphabetPtr& alphabet) {
  return LieParser(text, alphabet).parse();
}

}  // namespace grt
