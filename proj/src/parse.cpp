#include "kahler/parse.hpp"

#include <cctype>

namespace kahler {

namespace {

enum class Tok {
  end,
  integer,
  ident,
  plus,
  minus,
  star,
  slash,
  caret,
  lparen,
  rparen,
  lbrace,
  rbrace,
  colon,
  semi,
  comma,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t pos = 0;  // 1-based byte offset of the first character
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at(Tok k) const { return tok_.kind == k; }
  /// Consume a token of kind k or fail with `what`.
  Token expect(Tok k, const char* what) {
    if (tok_.kind != k)
      throw ParseError(std::string("expected ") + what + ", found '" +
                           describe(tok_) + "'",
                       tok_.pos);
    return take();
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::end ? "end of input" : t.text;
  }

 private:
  void advance() {
    while (i_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[i_])))
      ++i_;
    tok_ = Token{};
    tok_.pos = i_ + 1;
    if (i_ >= src_.size()) {
      tok_.kind = Tok::end;
      return;
    }
    const char c = src_[i_];
    auto single = [&](Tok k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      ++i_;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Tok::integer;
      while (i_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[i_])))
        tok_.text += src_[i_++];
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Tok::ident;
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
              src_[i_] == '_'))
        tok_.text += src_[i_++];
      return;
    }
    switch (c) {
      case '+': return single(Tok::plus);
      case '-': return single(Tok::minus);
      case '*': return single(Tok::star);
      case '/': return single(Tok::slash);
      case '^': return single(Tok::caret);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      case ':': return single(Tok::colon);
      case ';': return single(Tok::semi);
      case ',': return single(Tok::comma);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         i_ + 1);
    }
  }

  const std::string& src_;
  std::size_t i_ = 0;
  Token tok_;
};

std::uint32_t parse_exponent(Lexer& lx) {
  Token t = lx.expect(Tok::integer, "an exponent");
  mpz_class e(t.text);
  if (e > 1000000)
    throw ParseError("exponent too large", t.pos);
  return static_cast<std::uint32_t>(e.get_ui());
}

/// term := factor { ['*'] factor } where factor is an integer (optionally
/// INT/INT) or a variable with optional ^INT.  Signs end the term.
Poly parse_term(Lexer& lx, const ContextPtr& ctx) {
  Poly acc = Poly::constant(ctx, 1);
  bool any = false;
  // Integer factors must open the term or follow an explicit '*'; silently
  // multiplying "x 3" would hide typos.
  bool number_ok = true;
  for (;;) {
    if (lx.at(Tok::integer)) {
      if (!number_ok)
        throw ParseError("unexpected integer (use '*' to multiply)",
                         lx.peek().pos);
      Token num = lx.take();
      mpz_class n(num.text);
      if (lx.at(Tok::slash)) {
        Token slash = lx.take();
        Token den = lx.expect(Tok::integer, "a denominator");
        mpz_class d(den.text);
        if (d == 0) throw ParseError("zero denominator", den.pos);
        try {
          acc = acc.scaled(Scalar::from_fraction(ctx->field(), n, d));
        } catch (const ZeroDivisionError&) {
          throw ParseError("denominator vanishes in " +
                               ctx->field().to_string(),
                           den.pos);
        }
        (void)slash;
      } else {
        acc = acc.scaled(Scalar::from_mpz(ctx->field(), n));
      }
      any = true;
      number_ok = false;
    } else if (lx.at(Tok::ident)) {
      Token v = lx.take();
      auto idx = ctx->index_of(v.text);
      if (!idx)
        throw ParseError("unknown variable '" + v.text + "'", v.pos);
      std::uint32_t e = 1;
      if (lx.at(Tok::caret)) {
        lx.take();
        e = parse_exponent(lx);
      }
      acc *= Poly::variable(ctx, *idx).pow(e);
      any = true;
      number_ok = false;
    } else if (lx.at(Tok::star)) {
      Token star = lx.take();
      if (!any)
        throw ParseError("'*' without a left factor", star.pos);
      if (!(lx.at(Tok::integer) || lx.at(Tok::ident)))
        throw ParseError("expected a factor after '*'", lx.peek().pos);
      number_ok = true;
    } else {
      break;
    }
  }
  if (!any)
    throw ParseError("expected a term, found '" + Lexer::describe(lx.peek()) +
                         "'",
                     lx.peek().pos);
  return acc;
}

Poly parse_poly_body(Lexer& lx, const ContextPtr& ctx) {
  Poly result = Poly::zero(ctx);
  bool negate = false;
  if (lx.at(Tok::plus)) {
    lx.take();
  } else if (lx.at(Tok::minus)) {
    lx.take();
    negate = true;
  }
  for (;;) {
    Poly t = parse_term(lx, ctx);
    result += negate ? -t : t;
    if (lx.at(Tok::plus)) {
      lx.take();
      negate = false;
    } else if (lx.at(Tok::minus)) {
      lx.take();
      negate = true;
    } else {
      break;
    }
  }
  return result;
}

}  // namespace

Poly parse_poly(const std::string& text, const ContextPtr& ctx) {
  if (!ctx) throw ContextError("parse_poly: null context");
  Lexer lx(text);
  Poly p = parse_poly_body(lx, ctx);
  if (!lx.at(Tok::end))
    throw ParseError("trailing input '" + Lexer::describe(lx.peek()) + "'",
                     lx.peek().pos);
  return p;
}

std::vector<Poly> parse_poly_tuple(const std::string& text,
                                   const ContextPtr& ctx) {
  if (!ctx) throw ContextError("parse_poly_tuple: null context");
  Lexer lx(text);
  std::vector<Poly> row;
  if (lx.at(Tok::lparen)) {
    lx.take();
    if (!lx.at(Tok::rparen)) {
      row.push_back(parse_poly_body(lx, ctx));
      while (lx.at(Tok::comma)) {
        lx.take();
        row.push_back(parse_poly_body(lx, ctx));
      }
    }
    lx.expect(Tok::rparen, "')'");
  } else {
    row.push_back(parse_poly_body(lx, ctx));
  }
  if (!lx.at(Tok::end))
    throw ParseError("trailing input '" + Lexer::describe(lx.peek()) + "'",
                     lx.peek().pos);
  return row;
}

namespace {

std::string expect_keyword(Lexer& lx, const char* kw) {
  Token t = lx.expect(Tok::ident, kw);
  if (t.text != kw)
    throw ParseError(std::string("expected '") + kw + "', found '" + t.text +
                         "'",
                     t.pos);
  return t.text;
}

}  // namespace

ParsedAlgebra parse_algebra_decl(const std::string& text, MonomialOrder order,
                                 const Field& field) {
  Lexer lx(text);
  expect_keyword(lx, "algebra");
  ParsedAlgebra out;
  out.name = lx.expect(Tok::ident, "an algebra name").text;
  lx.expect(Tok::lbrace, "'{'");

  expect_keyword(lx, "vars");
  lx.expect(Tok::colon, "':'");
  std::vector<std::string> vars;
  if (!lx.at(Tok::semi)) {
    vars.push_back(lx.expect(Tok::ident, "a variable name").text);
    while (lx.at(Tok::comma)) {
      lx.take();
      vars.push_back(lx.expect(Tok::ident, "a variable name").text);
    }
  }
  lx.expect(Tok::semi, "';'");
  Token mark = lx.peek();
  try {
    out.ctx = make_context(vars, order, field);
  } catch (const Error& e) {
    throw ParseError(e.what(), mark.pos);
  }

  if (lx.at(Tok::ident) && lx.peek().text == "relations") {
    lx.take();
    lx.expect(Tok::colon, "':'");
    if (!lx.at(Tok::semi)) {
      out.relations.push_back(parse_poly_body(lx, out.ctx));
      while (lx.at(Tok::comma)) {
        lx.take();
        out.relations.push_back(parse_poly_body(lx, out.ctx));
      }
    }
    lx.expect(Tok::semi, "';'");
  }
  lx.expect(Tok::rbrace, "'}'");
  if (!lx.at(Tok::end))
    throw ParseError("trailing input '" + Lexer::describe(lx.peek()) + "'",
                     lx.peek().pos);
  return out;
}

ParsedModule parse_module_decl(const std::string& text,
                               const ContextPtr& ctx) {
  if (!ctx) throw ContextError("parse_module_decl: null context");
  Lexer lx(text);
  expect_keyword(lx, "module");
  ParsedModule out;
  out.name = lx.expect(Tok::ident, "a module name").text;
  expect_keyword(lx, "over");
  out.over = lx.expect(Tok::ident, "an algebra name").text;
  lx.expect(Tok::lbrace, "'{'");

  expect_keyword(lx, "rank");
  lx.expect(Tok::colon, "':'");
  Token r = lx.expect(Tok::integer, "a rank");
  out.rank = static_cast<std::size_t>(mpz_class(r.text).get_ui());
  lx.expect(Tok::semi, "';'");

  if (lx.at(Tok::ident) && lx.peek().text == "relations") {
    lx.take();
    lx.expect(Tok::colon, "':'");
    while (lx.at(Tok::lparen)) {
      Token open = lx.take();
      std::vector<Poly> row;
      if (!lx.at(Tok::rparen)) {
        row.push_back(parse_poly_body(lx, ctx));
        while (lx.at(Tok::comma)) {
          lx.take();
          row.push_back(parse_poly_body(lx, ctx));
        }
      }
      lx.expect(Tok::rparen, "')'");
      if (row.size() != out.rank)
        throw ParseError("relation row has " + std::to_string(row.size()) +
                             " components, expected " +
                             std::to_string(out.rank),
                         open.pos);
      out.rows.push_back(std::move(row));
      if (lx.at(Tok::comma))
        lx.take();
      else
        break;
    }
    lx.expect(Tok::semi, "';'");
  }
  lx.expect(Tok::rbrace, "'}'");
  if (!lx.at(Tok::end))
    throw ParseError("trailing input '" + Lexer::describe(lx.peek()) + "'",
                     lx.peek().pos);
  return out;
}

}  // namespace kahler
