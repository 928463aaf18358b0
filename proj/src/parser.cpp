#include "ttc/parser.hpp"

#include <cctype>
#include <unordered_set>
#include <utility>

namespace ttc {

RawTerm::RawTerm(RawNode node, Span span)
    : node_(std::make_shared<const RawNode>(std::move(node))), span_(span) {}

namespace {

enum class Tok {
  Ident,
  Nat,
  KwDef,
  KwAxiom,
  KwFun,
  KwU,
  KwProp,
  Colon,
  ColonEq,
  Dot,
  LParen,
  RParen,
  Arrow,
  FatArrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Nat: return "number";
    case Tok::KwDef: return "'def'";
    case Tok::KwAxiom: return "'axiom'";
    case Tok::KwFun: return "'fun'";
    case Tok::KwU: return "'U'";
    case Tok::KwProp: return "'Prop'";
    case Tok::Colon: return "':'";
    case Tok::ColonEq: return "':='";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Arrow: return "'->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::uint32_t line = 1, col = 1;
  std::size_t i = 0;
  auto here = [&] { return Span{line, col}; };
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Span span = here();
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_cont(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      advance(j - i);
      Tok kind = Tok::Ident;
      if (word == "def") kind = Tok::KwDef;
      else if (word == "axiom") kind = Tok::KwAxiom;
      else if (word == "fun") kind = Tok::KwFun;
      else if (word == "U") kind = Tok::KwU;
      else if (word == "Prop") kind = Tok::KwProp;
      out.push_back({kind, std::move(word), span});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits = text.substr(i, j - i);
      advance(j - i);
      out.push_back({Tok::Nat, std::move(digits), span});
      continue;
    }
    switch (c) {
      case ':':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          advance(2);
          out.push_back({Tok::ColonEq, ":=", span});
        } else {
          advance(1);
          out.push_back({Tok::Colon, ":", span});
        }
        continue;
      case '.':
        advance(1);
        out.push_back({Tok::Dot, ".", span});
        continue;
      case '(':
        advance(1);
        out.push_back({Tok::LParen, "(", span});
        continue;
      case ')':
        advance(1);
        out.push_back({Tok::RParen, ")", span});
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          advance(2);
          out.push_back({Tok::Arrow, "->", span});
          continue;
        }
        break;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          advance(2);
          out.push_back({Tok::FatArrow, "=>", span});
          continue;
        }
        break;
      default:
        break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", span);
  }
  out.push_back({Tok::End, "", Span{line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  std::vector<RawDecl> file() {
    std::vector<RawDecl> decls;
    std::unordered_set<std::string> names;
    while (peek().kind != Tok::End) {
      RawDecl d = decl();
      if (!names.insert(d.name).second)
        throw ParseError("duplicate declaration name '" + d.name + "'", d.span);
      decls.push_back(std::move(d));
    }
    return decls;
  }

  RawTerm single_term() {
    RawTerm t = term();
    expect(Tok::End);
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }

  const Token& take() { return tokens_[pos_++]; }

  const Token& expect(Tok kind) {
    if (peek().kind != kind)
      throw ParseError(std::string("expected ") + tok_name(kind) + ", found " +
                           tok_name(peek().kind),
                       peek().span);
    return take();
  }

  RawDecl decl() {
    const Token& kw = peek();
    if (kw.kind == Tok::KwDef) {
      take();
      std::string name = expect(Tok::Ident).text;
      expect(Tok::Colon);
      RawTerm type = term();
      expect(Tok::ColonEq);
      RawTerm body = term();
      expect(Tok::Dot);
      return RawDecl{RawDecl::Kind::Definition, std::move(name), std::move(type),
                     std::move(body), kw.span};
    }
    if (kw.kind == Tok::KwAxiom) {
      take();
      std::string name = expect(Tok::Ident).text;
      expect(Tok::Colon);
      RawTerm type = term();
      expect(Tok::Dot);
      return RawDecl{RawDecl::Kind::Axiom, std::move(name), std::move(type), std::nullopt,
                     kw.span};
    }
    throw ParseError(std::string("expected 'def' or 'axiom', found ") + tok_name(kw.kind),
                     kw.span);
  }

  bool at_binder_group() const {
    return peek().kind == Tok::LParen && peek(1).kind == Tok::Ident &&
           peek(2).kind == Tok::Colon;
  }

  RawTerm term() {
    if (peek().kind == Tok::KwFun) {
      Span span = take().span;
      expect(Tok::LParen);
      std::string name = expect(Tok::Ident).text;
      expect(Tok::Colon);
      RawTerm annot = term();
      expect(Tok::RParen);
      expect(Tok::FatArrow);
      RawTerm body = term();
      return RawTerm(RawNode{RLam{std::move(name), std::move(annot), std::move(body)}}, span);
    }
    if (at_binder_group()) {
      Span span = peek().span;
      take();  // (
      std::string name = take().text;
      take();  // :
      RawTerm dom = term();
      expect(Tok::RParen);
      expect(Tok::Arrow);
      RawTerm cod = term();
      return RawTerm(RawNode{RPi{std::move(name), std::move(dom), std::move(cod)}}, span);
    }
    RawTerm lhs = application();
    if (peek().kind == Tok::Arrow) {
      take();
      RawTerm cod = term();  // right associative
      Span span = lhs.span();
      return RawTerm(RawNode{RArrow{std::move(lhs), std::move(cod)}}, span);
    }
    return lhs;
  }

  RawTerm application() {
    RawTerm fn = atom();
    while (starts_atom(peek().kind)) {
      RawTerm arg = atom();
      Span span = fn.span();
      fn = RawTerm(RawNode{RApp{std::move(fn), std::move(arg)}}, span);
    }
    return fn;
  }

  static bool starts_atom(Tok kind) {
    return kind == Tok::Ident || kind == Tok::KwU || kind == Tok::KwProp ||
           kind == Tok::LParen;
  }

  RawTerm atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Ident: {
        take();
        return RawTerm(RawNode{RVar{tok.text}}, tok.span);
      }
      case Tok::KwProp: {
        take();
        return RawTerm(RawNode{RUniv{0}}, tok.span);
      }
      case Tok::KwU: {
        Span span = take().span;
        const Token& nat = expect(Tok::Nat);
        unsigned long long level = 0;
        for (char d : nat.text) {
          level = level * 10 + static_cast<unsigned long long>(d - '0');
          if (level > 1000000) throw ParseError("universe level too large", nat.span);
        }
        return RawTerm(RawNode{RUniv{static_cast<std::uint32_t>(level)}}, span);
      }
      case Tok::LParen: {
        take();
        RawTerm inner = term();
        expect(Tok::RParen);
        return inner;
      }
      default:
        throw ParseError(std::string("expected a term, found ") + tok_name(tok.kind), tok.span);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<RawDecl> parse_file(const std::string& text) { return Parser(text).file(); }

RawTerm parse_term(const std::string& text) { return Parser(text).single_term(); }

}  // namespace ttc
