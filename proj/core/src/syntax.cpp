#include "oto/syntax.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "oto/normalize.hpp"
#include "oto/order.hpp"

namespace oto {

namespace {

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       std::string found)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": expected " + join(expected, " or ") + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { kNum, kS, kE, kBigW, kSmallW, kPhi, kLParen, kRParen, kCaret, kStar, kPlus,
                 kComma, kLBracket, kRBracket, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t value = 0;
  std::size_t line = 1, column = 1;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::kEnd, std::string(1, c), 0, line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::kNum;
      t.text = std::string(s.substr(i, j - i));
      auto [p, ec] = std::from_chars(s.data() + i, s.data() + j, t.value);
      if (ec != std::errc()) throw ParseError(line, col, {"a number below 2^64"}, "'" + t.text + "'");
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (s.substr(i, 3) == "phi") {
      t.kind = Tok::kPhi;
      t.text = "phi";
      out.push_back(t);
      advance(3);
      continue;
    }
    switch (c) {
      case 'S': t.kind = Tok::kS; break;
      case 'E': t.kind = Tok::kE; break;
      case 'W': t.kind = Tok::kBigW; break;
      case 'w': t.kind = Tok::kSmallW; break;
      case '(': t.kind = Tok::kLParen; break;
      case ')': t.kind = Tok::kRParen; break;
      case '^': t.kind = Tok::kCaret; break;
      case '*': t.kind = Tok::kStar; break;
      case '+': t.kind = Tok::kPlus; break;
      case ',': t.kind = Tok::kComma; break;
      case '[': t.kind = Tok::kLBracket; break;
      case ']': t.kind = Tok::kRBracket; break;
      default: throw ParseError(line, col, {"a term"}, "'" + t.text + "'");
    }
    out.push_back(t);
    advance(1);
  }
  out.push_back(Token{Tok::kEnd, "", 0, line, col});
  return out;
}

// A parsed value: raw canonical-fragment syntax when possible, otherwise an
// extended-layer expression.
struct Value {
  std::optional<RawTerm> raw;
  std::optional<ExtTerm> ext;

  ExtTerm as_ext() const { return ext ? *ext : ExtTerm::canon(normalize(*raw)); }
};

// A parsed function symbol. `raw_exponent` is set for Suc^a; `plain` for Suc.
struct FunValue {
  FunExpr fun;
  bool plain = false;
  std::optional<RawTerm> raw_exponent;
};

std::vector<ExtTerm> flatten(const Value& v) {
  if (v.raw) return {ExtTerm::canon(normalize(*v.raw))};
  if (v.ext->kind() == ExtTerm::Kind::kSum) return v.ext->parts();
  return {*v.ext};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Value parse_all() {
    Value v = term();
    if (peek().kind != Tok::kEnd) fail({"'+'", "end of input"});
    return v;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected),
                     t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'");
  }

  void expect(Tok k, const char* name) {
    if (peek().kind != k) fail({std::string("'") + name + "'"});
    ++pos_;
  }

  Term canonical(const Value& v, const char* what) {
    if (v.raw) return normalize(*v.raw);
    if (v.ext->kind() == ExtTerm::Kind::kCanon) return v.ext->term();
    const Token& t = toks_[pos_ - 1];
    throw ParseError(t.line, t.column, {std::string("a canonical term as ") + what},
                     "an extended expression");
  }

  Value term() {
    Value acc = unit();
    while (peek().kind == Tok::kPlus) {
      ++pos_;
      Value rhs = unit();
      if (acc.raw && rhs.raw) {
        acc.raw = RawTerm::plus(std::move(*acc.raw), std::move(*rhs.raw));
        continue;
      }
      std::vector<ExtTerm> parts;
      for (const auto* side : {&acc, &rhs}) {
        for (auto& p : flatten(*side)) {
          if (!parts.empty() && parts.back().kind() == ExtTerm::Kind::kCanon &&
              p.kind() == ExtTerm::Kind::kCanon) {
            parts.back() = ExtTerm::canon(add(parts.back().term(), p.term()));
          } else {
            parts.push_back(std::move(p));
          }
        }
      }
      acc = Value{std::nullopt, ExtTerm::sum(std::move(parts))};
    }
    return acc;
  }

  Value atom() {
    if (peek().kind == Tok::kLParen) {
      ++pos_;
      Value v = term();
      expect(Tok::kRParen, ")");
      return v;
    }
    return unit();
  }

  Value unit() {
    switch (peek().kind) {
      case Tok::kNum: return Value{RawTerm::nat_of(next().value), std::nullopt};
      case Tok::kBigW: {
        ++pos_;
        if (peek().kind != Tok::kCaret) return Value{RawTerm::omega(), std::nullopt};
        ++pos_;
        Value e = atom();
        expect(Tok::kStar, "*");
        Value c = atom();
        if (e.raw && c.raw) return Value{RawTerm::omega_pow(std::move(*e.raw), std::move(*c.raw)), std::nullopt};
        return Value{RawTerm::omega_pow(to_raw(canonical(e, "Omega exponent")),
                                        to_raw(canonical(c, "Omega coefficient"))),
                     std::nullopt};
      }
      case Tok::kSmallW: {
        ++pos_;
        expect(Tok::kCaret, "^");
        Value e = atom();
        if (e.raw) return Value{RawTerm::wpow(std::move(*e.raw)), std::nullopt};
        return Value{std::nullopt, ExtTerm::veblen(ExtTerm::canon(Term()), *e.ext)};
      }
      case Tok::kPhi: {
        ++pos_;
        expect(Tok::kLParen, "(");
        Value a = term();
        expect(Tok::kComma, ",");
        Value b = term();
        expect(Tok::kRParen, ")");
        return Value{std::nullopt, ExtTerm::veblen(a.as_ext(), b.as_ext())};
      }
      case Tok::kS:
      case Tok::kE: {
        FunValue f = fun();
        expect(Tok::kLParen, "(");
        Value x = term();
        expect(Tok::kRParen, ")");
        if (x.raw && f.plain) return Value{RawTerm::succ(std::move(*x.raw)), std::nullopt};
        if (x.raw && f.raw_exponent) {
          return Value{RawTerm::collapse(std::move(*f.raw_exponent), std::move(*x.raw)), std::nullopt};
        }
        return Value{std::nullopt, ExtTerm::apply(f.fun, x.as_ext())};
      }
      case Tok::kLParen: {
        ++pos_;
        Value v = term();
        expect(Tok::kRParen, ")");
        return v;
      }
      default: fail({"a number", "'W'", "'w^'", "'S'", "'E'", "'phi'", "'('"});
    }
  }

  FunValue fun() {
    FunValue f;
    const bool suc = next().kind == Tok::kS;
    f.fun = suc ? FunExpr::suc() : FunExpr::e();
    f.plain = suc;
    for (;;) {
      if (peek().kind == Tok::kCaret) {
        ++pos_;
        Value a = atom();
        const Term e = canonical(a, "iterate exponent");
        if (f.plain) f.raw_exponent = a.raw ? *a.raw : to_raw(e);
        else f.raw_exponent.reset();
        f.plain = false;
        f.fun = FunExpr::iterate(f.fun, e);
      } else if (peek().kind == Tok::kLBracket) {
        ++pos_;
        CoeffSet k;
        if (peek().kind != Tok::kRBracket) {
          for (;;) {
            const Token at = peek();
            const Term member = canonical(term(), "shift member");
            if (!member.is_below_omega()) {
              throw ParseError(at.line, at.column, {"a shift member below W"}, "'" + at.text + "'");
            }
            k.insert(member);
            if (peek().kind != Tok::kComma) break;
            ++pos_;
          }
        }
        expect(Tok::kRBracket, "]");
        f.fun = FunExpr::shift(f.fun, std::move(k));
        f.plain = false;
        f.raw_exponent.reset();
      } else {
        return f;
      }
    }
  }
};

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

ExtTerm parse_ext(std::string_view text) { return Parser(text).parse_all().as_ext(); }

Term parse_term(std::string_view text) {
  const ExtTerm e = parse_ext(text);
  if (e.kind() != ExtTerm::Kind::kCanon) {
    throw ParseError(1, 1, {"a canonical term (no E, phi, shifts or nested iterates)"},
                     "an extended expression");
  }
  return e.term();
}

std::string to_string(const Monomial& m) {
  switch (m.kind()) {
    case MonoKind::kWPow: return "w^" + paren(to_string(m.exponent()));
    case MonoKind::kOmegaMono:
      if (m.is_omega()) return "W";
      return "W^" + paren(to_string(m.exponent())) + "*" + paren(to_string(m.coefficient()));
    case MonoKind::kCollapse: return "S^" + paren(to_string(m.iterate())) + paren(to_string(m.seed()));
  }
  return "?";
}

std::string to_string(const Term& t) {
  if (t.is_zero()) return "0";
  std::vector<std::string> parts;
  std::size_t ones = 0;
  for (const auto& p : t.parts()) {
    if (p.is_one()) {
      ++ones;
    } else {
      parts.push_back(to_string(p));
    }
  }
  if (ones) parts.push_back(std::to_string(ones));
  return join(parts, " + ");
}

std::string to_string(const FunExpr& f) {
  switch (f.kind()) {
    case FunExpr::Kind::kSuc: return "S";
    case FunExpr::Kind::kE: return "E";
    case FunExpr::Kind::kIterate: return to_string(f.base()) + "^" + paren(to_string(f.exponent()));
    case FunExpr::Kind::kShift: {
      std::vector<std::string> members;
      for (const auto& k : f.shift_set()) members.push_back(to_string(k));
      return to_string(f.base()) + "[" + join(members, ", ") + "]";
    }
  }
  return "?";
}

std::string to_string(const ExtTerm& s) {
  switch (s.kind()) {
    case ExtTerm::Kind::kCanon: return to_string(s.term());
    case ExtTerm::Kind::kApply: return to_string(s.fun()) + paren(to_string(s.arg()));
    case ExtTerm::Kind::kVeblen:
      return "phi(" + to_string(s.left()) + ", " + to_string(s.right()) + ")";
    case ExtTerm::Kind::kSum: {
      std::vector<std::string> parts;
      for (const auto& p : s.parts()) parts.push_back(to_string(p));
      return join(parts, " + ");
    }
  }
  return "?";
}

std::string to_string(const Fact& f) {
  switch (f.kind) {
    case Fact::Kind::kTermLE: return to_string(f.lhs) + " <= " + to_string(f.rhs);
    case Fact::Kind::kTermLT: return to_string(f.lhs) + " < " + to_string(f.rhs);
    case Fact::Kind::kFunLE: return to_string(f.flhs) + " <= " + to_string(f.frhs) + " pointwise";
  }
  return "?";
}

std::string format_trace(const ProofTrace& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& st = trace[i];
    os << i << ". " << st.rule;
    if (!st.premises.empty()) {
      os << " [";
      for (std::size_t j = 0; j < st.premises.size(); ++j) os << (j ? ", " : "") << st.premises[j];
      os << "]";
    }
    os << ": " << to_string(st.conclusion) << "\n";
  }
  return os.str();
}

}  // namespace oto
