#include "smtl/parser.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace smtl {

ParseError::ParseError(SourceSpan span, std::vector<std::string> expected, std::string found)
    : Error([&] {
        std::string msg = std::to_string(span.line) + ":" + std::to_string(span.column) +
                          ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i) msg += i + 1 == expected.size() ? " or " : ", ";
          msg += expected[i];
        }
        msg += ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
        return msg;
      }()),
      span_(span), expected_(std::move(expected)), found_(std::move(found)) {
  if (expected_.empty()) expected_.emplace_back("valid input");
}

namespace {

enum class Tok {
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Bang,
  Amp,
  Pipe,
  Arrow,
  Ident,
  Number,
  True,
  False,
  Eventually,
  Always,
  Until,
  Release,
  Stratum,
  Inf,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", span_from(pos_, pos_)});
        return out;
      }
      out.push_back(next());
    }
  }

private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  SourceSpan span_from(std::size_t start, std::size_t end) const {
    // Tokens never span a newline, so the column is relative to the current line.
    return {start, end, line_, static_cast<int>(start - line_start_) + 1};
  }

  static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  std::size_t utf8_length(std::size_t at) const {
    auto lead = static_cast<unsigned char>(src_[at]);
    std::size_t len = lead >= 0xF0 ? 4 : lead >= 0xE0 ? 3 : lead >= 0xC0 ? 2 : 1;
    return std::min(len, src_.size() - at);
  }

  Token next() {
    std::size_t start = pos_;
    char c = src_[pos_];
    auto single = [&](Tok kind) {
      advance();
      return Token{kind, std::string(1, c), span_from(start, pos_)};
    };
    switch (c) {
    case '(': return single(Tok::LParen);
    case ')': return single(Tok::RParen);
    case '[': return single(Tok::LBracket);
    case ']': return single(Tok::RBracket);
    case ',': return single(Tok::Comma);
    case '!': return single(Tok::Bang);
    case '&': return single(Tok::Amp);
    case '|': return single(Tok::Pipe);
    case '-':
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        pos_ += 2;
        return {Tok::Arrow, "->", span_from(start, pos_)};
      }
      {
        // Cover whatever followed the dash: that is what broke the arrow.
        std::size_t end = start + 1 < src_.size() ? start + 1 + utf8_length(start + 1) : start + 1;
        throw ParseError(span_from(start, end), {"'->'"}, std::string(src_.substr(start, end - start)));
      }
    default:
      break;
    }

    if (digit(c)) return number(start);

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        advance();
      std::string word(src_.substr(start, pos_ - start));
      return {keyword(word), word, span_from(start, pos_)};
    }

    auto len = utf8_length(start);
    throw ParseError(span_from(start, start + len), {"operator", "identifier", "'('"},
                     std::string(src_.substr(start, len)));
  }

  Token number(std::size_t start) {
    while (pos_ < src_.size() && digit(src_[pos_])) advance();
    if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == '/')) {
      char sep = src_[pos_];
      advance();
      if (pos_ >= src_.size() || !digit(src_[pos_])) {
        std::size_t end = pos_ < src_.size() ? pos_ + utf8_length(pos_) : pos_;
        throw ParseError(span_from(start, end),
                         {sep == '.' ? "digits after '.'" : "denominator after '/'"},
                         std::string(src_.substr(start, end - start)));
      }
      while (pos_ < src_.size() && digit(src_[pos_])) advance();
    }
    return {Tok::Number, std::string(src_.substr(start, pos_ - start)), span_from(start, pos_)};
  }

  static Tok keyword(const std::string& w) {
    if (w == "true") return Tok::True;
    if (w == "false") return Tok::False;
    if (w == "F") return Tok::Eventually;
    if (w == "G") return Tok::Always;
    if (w == "U") return Tok::Until;
    if (w == "R") return Tok::Release;
    if (w == "inf") return Tok::Inf;
    if (w.front() == 'L' && (w.size() == 1 || is_reserved_word(w))) return Tok::Stratum;
    return Tok::Ident;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula run() {
    Formula f = implies();
    if (peek().kind != Tok::End) fail({"operator", "end of input"});
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().span, std::move(expected), peek().text);
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail({what});
  }

  Formula implies() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implies(std::move(lhs), implies());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Pipe)) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = until();
    while (accept(Tok::Amp)) f = Formula::conjunction(std::move(f), until());
    return f;
  }

  Formula until() {
    Formula f = unary();
    for (;;) {
      if (accept(Tok::Until)) {
        Interval i = interval();
        f = Formula::until(std::move(f), std::move(i), unary());
      } else if (accept(Tok::Release)) {
        Interval i = interval();
        f = Formula::release(std::move(f), std::move(i), unary());
      } else {
        return f;
      }
    }
  }

  Formula unary() {
    switch (peek().kind) {
    case Tok::Bang:
      take();
      return Formula::negation(unary());
    case Tok::Eventually: {
      take();
      Interval i = interval();
      return Formula::eventually(std::move(i), unary());
    }
    case Tok::Always: {
      take();
      Interval i = interval();
      return Formula::always(std::move(i), unary());
    }
    case Tok::Stratum: {
      int level = stratum_level();
      return Formula::stratum(level, unary());
    }
    default:
      return primary();
    }
  }

  int stratum_level() {
    const Token& kw = take();
    std::string digits;
    SourceSpan span = kw.span;
    if (kw.text.size() > 1) {
      digits = kw.text.substr(1);
    } else {
      if (peek().kind != Tok::Number || peek().text.find_first_of("./") != std::string::npos)
        fail({"stratum level"});
      span = peek().span;
      digits = take().text;
    }
    int level = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), level);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || level < 1)
      throw ParseError(span, {"stratum level >= 1"}, digits);
    return level;
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::True:
      take();
      return Formula::truth();
    case Tok::False:
      take();
      return Formula::falsity();
    case Tok::Ident:
      take();
      return Formula::atom(t.text);
    case Tok::LParen: {
      take();
      Formula f = implies();
      expect(Tok::RParen, "')'");
      return f;
    }
    default:
      fail({"proposition", "'true'", "'false'", "'('", "unary operator"});
    }
  }

  Interval interval() {
    const Token& open = peek();
    if (open.kind != Tok::LBracket && open.kind != Tok::LParen) fail({"'['", "'('"});
    take();
    bool lower_closed = open.kind == Tok::LBracket;

    if (peek().kind != Tok::Number) fail({"number"});
    Rational lower = parse_rational(take().text);
    expect(Tok::Comma, "','");

    std::optional<Rational> upper;
    if (accept(Tok::Inf)) {
      if (peek().kind != Tok::RParen) fail({"')' after inf"});
    } else if (peek().kind == Tok::Number) {
      upper = parse_rational(take().text);
    } else {
      fail({"number", "'inf'"});
    }

    const Token& close = peek();
    if (close.kind != Tok::RBracket && close.kind != Tok::RParen) fail({"']'", "')'"});
    take();
    bool upper_closed = close.kind == Tok::RBracket;
    try {
      return Interval(std::move(lower), std::move(upper), lower_closed, upper_closed);
    } catch (const std::invalid_argument&) {
      SourceSpan span = open.span;
      span.end_offset = close.span.end_offset;
      std::string text;
      for (std::size_t i = pos_ - 5; i < pos_; ++i) text += toks_[i].text;
      throw ParseError(span, {"non-empty interval"}, text);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

enum Prec { kImplies = 1, kOr = 2, kAnd = 3, kUntil = 4, kUnary = 5, kPrimary = 6 };

int precedence(const Formula& f) {
  switch (f.op()) {
  case Op::Implies: return kImplies;
  case Op::Or: return kOr;
  case Op::And: return kAnd;
  case Op::Until:
  case Op::Release: return kUntil;
  case Op::Not:
  case Op::Eventually:
  case Op::Always:
  case Op::Stratum: return kUnary;
  default: return kPrimary;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  bool parens = precedence(f) < min_prec;
  if (parens) out += '(';
  switch (f.op()) {
  case Op::True: out += "true"; break;
  case Op::False: out += "false"; break;
  case Op::Atom: out += f.name(); break;
  case Op::Not:
    out += '!';
    print(f.lhs(), kUnary, out);
    break;
  case Op::Eventually:
  case Op::Always:
    out += f.op() == Op::Eventually ? 'F' : 'G';
    out += f.interval().to_string();
    out += ' ';
    print(f.lhs(), kUnary, out);
    break;
  case Op::Stratum:
    out += 'L';
    out += std::to_string(f.level());
    out += ' ';
    print(f.lhs(), kUnary, out);
    break;
  case Op::Until:
  case Op::Release:
    print(f.lhs(), kUntil, out);
    out += f.op() == Op::Until ? " U" : " R";
    out += f.interval().to_string();
    out += ' ';
    print(f.rhs(), kUnary, out);
    break;
  case Op::And:
    print(f.lhs(), kAnd, out);
    out += " & ";
    print(f.rhs(), kUntil, out);
    break;
  case Op::Or:
    print(f.lhs(), kOr, out);
    out += " | ";
    print(f.rhs(), kAnd, out);
    break;
  case Op::Implies:
    print(f.lhs(), kOr, out);
    out += " -> ";
    print(f.rhs(), kImplies, out);
    break;
  }
  if (parens) out += ')';
}

} // namespace

Formula parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::string pretty_print(const Formula& f) {
  std::string out;
  print(f, kImplies, out);
  return out;
}

} // namespace smtl
