#include <cctype>
#include <fstream>
#include <unistd.h>

#include "sails/cli.hpp"

namespace sails::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SurdSpec spec() {
    skip();
    if (peek() == '[') return cf_literal();
    if (text_.substr(pos_).starts_with("root+") || text_.substr(pos_).starts_with("root-")) {
      return root();
    }
    const Number value = expression();
    finish();
    if (std::holds_alternative<Rational>(value)) {
      throw Error(ErrorKind::RationalValue, to_string(value) + " is rational");
    }
    return std::get<QuadraticSurd>(value);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
  }

  BigInt integer(bool allow_sign) {
    skip();
    const std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    BigInt n(std::string(text_.substr(digits, pos_ - digits)));
    if (text_[start] == '-') n = -n;
    skip();
    return n;
  }

  // expression := term (('+' | '-') term)*
  Number expression() {
    Number lhs = term();
    for (;;) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = arith(lhs, term(), c == '+' ? ArithOp::Add : ArithOp::Sub);
    }
  }

  // term := unary (('*' | '/') unary)*
  Number term() {
    Number lhs = unary();
    for (;;) {
      skip();
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      const std::size_t at = ++pos_;
      const Number rhs = unary();
      try {
        lhs = arith(lhs, rhs, c == '*' ? ArithOp::Mul : ArithOp::Div);
      } catch (const Error& e) {
        throw ParseError(at, e.what());
      }
    }
  }

  Number unary() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return arith(Rational(0), unary(), ArithOp::Sub);
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return primary();
  }

  Number primary() {
    skip();
    if (peek() == '(') {
      expect('(');
      Number inner = expression();
      expect(')');
      return inner;
    }
    if (text_.substr(pos_).starts_with("sqrt")) {
      pos_ += 4;
      expect('(');
      const std::size_t at = pos_;
      const Number radicand = expression();
      expect(')');
      if (!std::holds_alternative<Rational>(radicand)) throw ParseError(at, "sqrt needs a rational argument");
      return square_root(std::get<Rational>(radicand), at);
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Rational(integer(false));
    fail(peek() == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, peek()) + "'");
  }

  // sqrt(p/q) = sqrt(p q) / q
  static Number square_root(const Rational& r, std::size_t at) {
    if (r < 0) throw ParseError(at, "sqrt of a negative number");
    const BigInt& p = numerator(r);
    const BigInt& q = denominator(r);
    const BigInt pq = p * q;
    if (is_perfect_square(pq)) return Rational(isqrt(pq), q);
    return QuadraticSurd::make(0, 1, q, pq);
  }

  SurdSpec root() {
    const bool larger = text_[pos_ + 4] == '+';
    pos_ += 5;
    const std::size_t at = pos_;
    if (!std::isspace(static_cast<unsigned char>(peek()))) fail("expected blank after root sign");
    const BigInt a = integer(true);
    const BigInt b = integer(true);
    const BigInt c = integer(true);
    finish();
    try {
      auto [big, small] = quadratic_roots(a, b, c);
      return larger ? big : small;
    } catch (const Error& e) {
      if (is_internal(e.kind())) throw;
      throw ParseError(at, e.what());
    }
  }

  // "[" a0 ";" a1 "," ... "(" p1 "," ... ")" "]"  or  "[" "(" ... ")" "]"
  SurdSpec cf_literal() {
    expect('[');
    std::vector<BigInt> pre;
    std::vector<BigInt> period;
    if (peek() != '(') {
      pre.push_back(integer(true));
      if (peek() != ';') fail("expected ';' after the integer part");
      expect(';');
      while (peek() != '(') {
        if (peek() == ']') fail("continued fraction has no period");
        pre.push_back(integer(false));
        if (peek() == ']') fail("continued fraction has no period");
        expect(',');
      }
    }
    expect('(');
    period.push_back(integer(false));
    while (peek() == ',') {
      expect(',');
      period.push_back(integer(false));
    }
    expect(')');
    expect(']');
    finish();
    try {
      return PeriodicCF::make(std::move(pre), std::move(period));
    } catch (const Error& e) {
      throw ParseError(1, e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SurdSpec parse_spec(std::string_view text) { return Parser(text).spec(); }

QuadraticSurd to_surd(const SurdSpec& spec) {
  if (const auto* x = std::get_if<QuadraticSurd>(&spec)) return *x;
  return value(std::get<PeriodicCF>(spec));
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "range must look like k0:k1");
  auto number = [&](std::string_view part, std::size_t offset) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(std::string(part), &used);
    } catch (const std::exception&) {
      throw ParseError(offset, "expected an integer");
    }
    if (used != part.size()) throw ParseError(offset + used, "trailing characters");
    return v;
  };
  const std::int64_t first = number(text.substr(0, colon), 0);
  const std::int64_t last = number(text.substr(colon + 1), colon + 1);
  if (first > last) throw Error(ErrorKind::InvalidArgument, "empty range " + std::string(text));
  return {first, last};
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) {
      std::filesystem::remove(tmp);
      throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorKind::InvalidArgument, "cannot replace " + path.string() + ": " + ec.message());
  }
}

}  // namespace sails::cli
