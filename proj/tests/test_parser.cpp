#include "ttc/parser.hpp"

#include "doctest.h"
#include "ttc/pretty.hpp"
#include "ttc/syntax.hpp"

using namespace ttc;

TEST_CASE("parse a file of declarations") {
  auto decls = parse_file("axiom P : Prop.");
  REQUIRE(decls.size() == 1);
  CHECK(decls[0].kind == RawDecl::Kind::Axiom);
  CHECK(decls[0].name == "P");
  CHECK_FALSE(decls[0].body.has_value());
  const RUniv* u = raw_as<RUniv>(decls[0].type);
  REQUIRE(u);
  CHECK(u->level == 0);

  decls = parse_file(
      "def id : (X : U 1) -> (x : X) -> X := fun (X : U 1) => fun (x : X) => x.");
  REQUIRE(decls.size() == 1);
  CHECK(decls[0].kind == RawDecl::Kind::Definition);
  const RPi* outer = raw_as<RPi>(decls[0].type);
  REQUIRE(outer);
  CHECK(outer->name == "X");
  REQUIRE(raw_as<RPi>(outer->cod));
  const RLam* lam = raw_as<RLam>(*decls[0].body);
  REQUIRE(lam);
  CHECK(lam->name == "X");
  REQUIRE(raw_as<RLam>(lam->body));

  decls = parse_file("def bot : Prop := (X : Prop) -> X.");
  REQUIRE(decls.size() == 1);
  const RPi* pi = raw_as<RPi>(*decls[0].body);
  REQUIRE(pi);
  REQUIRE(raw_as<RUniv>(pi->dom));
  CHECK(raw_as<RUniv>(pi->dom)->level == 0);
}

TEST_CASE("parse single terms") {
  RawTerm t = parse_term("U 0");
  REQUIRE(raw_as<RUniv>(t));
  CHECK(raw_as<RUniv>(t)->level == 0);

  t = parse_term("Prop");
  REQUIRE(raw_as<RUniv>(t));
  CHECK(raw_as<RUniv>(t)->level == 0);

  // Application is left associative.
  t = parse_term("f x y");
  const RApp* outer = raw_as<RApp>(t);
  REQUIRE(outer);
  const RApp* inner = raw_as<RApp>(outer->fn);
  REQUIRE(inner);
  CHECK(raw_as<RVar>(inner->fn)->name == "f");
  CHECK(raw_as<RVar>(inner->arg)->name == "x");
  CHECK(raw_as<RVar>(outer->arg)->name == "y");

  // Arrows are right associative sugar.
  t = parse_term("A -> B -> C");
  const RArrow* arrow = raw_as<RArrow>(t);
  REQUIRE(arrow);
  CHECK(raw_as<RVar>(arrow->dom)->name == "A");
  REQUIRE(raw_as<RArrow>(arrow->cod));

  // A parenthesized product can be a domain.
  t = parse_term("((x : U 1) -> x) -> Prop");
  REQUIRE(raw_as<RArrow>(t));
  CHECK(raw_as<RPi>(raw_as<RArrow>(t)->dom));
}

TEST_CASE("comments and spans") {
  auto decls = parse_file("-- a comment\naxiom Q : Prop. -- trailing\n");
  REQUIRE(decls.size() == 1);
  CHECK(decls[0].span.line == 2);
  CHECK(decls[0].span.col == 1);
  CHECK(decls[0].type.span().line == 2);
  CHECK(decls[0].type.span().col == 11);
}

TEST_CASE("parse errors carry a span inside the input") {
  auto lines_of = [](const std::string& text) {
    std::uint32_t n = 1;
    for (char c : text) n += c == '\n';
    return n;
  };
  const std::string cases[] = {
      "axiom P Prop.",
      "def x : Prop :=",
      "axiom : Prop.",
      "axiom P : (Prop.",
      "def d : Prop := 3.",
  };
  for (const std::string& text : cases) {
    CAPTURE(text);
    try {
      parse_file(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.span.line >= 1);
      CHECK(e.span.line <= lines_of(text));
      CHECK(e.span.col >= 1);
      CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
  }
}

TEST_CASE("duplicate declaration names are rejected") {
  CHECK_THROWS_AS(parse_file("axiom P : Prop. axiom P : Prop."), ParseError);
}

TEST_CASE("the irrelevant constant is printable but not parseable") {
  CHECK(pretty(Term::irrel(), {}, true) == "0");
  CHECK(pretty(Term::irrel(), {}, false) == "0");
  CHECK_THROWS_AS(parse_term("0"), ParseError);
}

TEST_CASE("surface printing") {
  CHECK(pretty(Term::pi(Term::univ(0), Term::var(0)), {}, false) == "(x0 : Prop) -> x0");
  CHECK(pretty(Term::pi(Term::univ(0), Term::univ(0)), {}, false) == "Prop -> Prop");
  CHECK(pretty(Term::univ(2), {}, false) == "U 2");
  Term eta = Term::lam(Term::univ(1), Term::univ(1),
                       Term::app(Term::univ(1), Term::univ(1), Term::constant("f"),
                                 Term::var(0)));
  CHECK(pretty(eta, {}, false) == "fun (x0 : U 1) => f x0");
  CHECK(pretty(eta, {}, true) == "(lam U1 U1 (app U1 U1 f v0))");
  // Context names are used for free variables.
  CHECK(pretty(Term::var(1), {"a", "b"}, false) == "a");
  CHECK(pretty(Term::var(0), {"a", "b"}, false) == "b");
}

TEST_CASE("annotated printing is the prefix grammar") {
  Term bot = Term::pi(Term::univ(0), Term::var(0));
  CHECK(pretty(bot, {}, true) == "(pi U0 v0)");
  Term redex = Term::app(Term::univ(2), Term::univ(2),
                         Term::lam(Term::univ(2), Term::univ(2), Term::var(0)), Term::univ(1));
  CHECK(pretty(redex, {}, true) == "(app U2 U2 (lam U2 U2 v0) U1)");
}
