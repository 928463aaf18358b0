#include "ttc/nbe.hpp"

#include "doctest.h"
#include "testutil.hpp"
#include "ttc/pretty.hpp"

using namespace ttc;
using testutil::add_axiom;
using testutil::mk_ctx;

namespace {

const GlobalEnv kEmpty;

Term u(Level n) { return Term::univ(n); }

// (X : Prop) -> X, the absurd proposition.
Term bot_code() { return Term::pi(u(0), Term::var(0)); }

}  // namespace

TEST_CASE("evaluation") {
  CHECK(value_as<VU>(eval(Env{}, u(1), kEmpty))->level == 1);

  Env env = Env{}.extended(vu(0));
  CHECK(value_as<VU>(eval(env, Term::var(0), kEmpty))->level == 0);

  // Beta: (lam v0) applied to U0 at (U1, U1).
  Term redex = Term::app(u(1), u(1), Term::lam(u(1), u(1), Term::var(0)), u(0));
  CHECK(value_as<VU>(eval(Env{}, redex, kEmpty))->level == 0);
}

TEST_CASE("application of values") {
  Closure identity{Env{}, Term::var(0)};
  Value applied = apply_value(vlam(identity), vu(0), vu(1), Closure{Env{}, u(1)}, kEmpty);
  CHECK(value_as<VU>(applied)->level == 0);

  // Applying a neutral grows its spine.
  Value f = vne(Neutral{NeVar{0}, vpi(vu(1), Closure{Env{}, u(1)}), {}});
  Value grown = apply_value(f, vu(0), vu(1), Closure{Env{}, u(1)}, kEmpty);
  REQUIRE(value_as<VNe>(grown));
  CHECK(value_as<VNe>(grown)->neutral.spine.size() == 1);

  // The irrelevant point absorbs applications.
  Value still = apply_value(virrel(), vu(0), vu(1), Closure{Env{}, u(1)}, kEmpty);
  CHECK(value_as<VIrrel>(still));
}

TEST_CASE("sorts: universes, impredicativity, neutral types") {
  CHECK(sort_of(vu(3), 0, kEmpty) == 4);

  // The absurd proposition lands in sort 0.
  CHECK(sort_of(eval(Env{}, bot_code(), kEmpty), 0, kEmpty) == 0);

  // (X : U1) -> X is predicative: max(2, 1) = 2.
  Term big = Term::pi(u(1), Term::var(0));
  CHECK(sort_of(eval(Env{}, big, kEmpty), 0, kEmpty) == 2);

  // A sort-0 codomain wins no matter how large the domain.
  GlobalEnv g;
  add_axiom(g, "P", u(0));
  Term large_dom = Term::pi(u(5), rename(Term::constant("P"), 0, 1));
  CHECK(sort_of(eval(Env{}, large_dom, g), 0, g) == 0);

  // Neutral type: the sort is read off the head's type along the spine.
  add_axiom(g, "F", Term::pi(u(1), u(2)));
  add_axiom(g, "X", u(1));
  Term fx = Term::app(u(1), u(2), Term::constant("F"), Term::constant("X"));
  CHECK(sort_of(eval(Env{}, fx, g), 0, g) == 2);
}

TEST_CASE("reflection") {
  CHECK(value_as<VNe>(reflect_fresh(vu(1), 0, kEmpty)));

  GlobalEnv g;
  add_axiom(g, "P", u(0));
  Value p = eval(Env{}, Term::constant("P"), g);
  CHECK(value_as<VIrrel>(reflect_fresh(p, 1, g)));

  // Reflection at a product is deferred to the spine.
  Value pi = vpi(vu(1), Closure{Env{}, Term::var(0)});
  Value r = reflect_fresh(pi, 0, kEmpty);
  REQUIRE(value_as<VNe>(r));
  CHECK(value_as<VNe>(r)->neutral.spine.empty());
}

TEST_CASE("quote") {
  CHECK(term_equal(quote(0, vu(1), vu(0), kEmpty), u(0)));

  GlobalEnv g;
  add_axiom(g, "P", u(0));
  Value p = eval(Env{}, Term::constant("P"), g);
  // Anything at a sort-0 type reads back as the constant 0.
  TypingContext ctx = mk_ctx({{"a", u(1)}, {"b", u(1)}}, g);
  CHECK(term_equal(quote(ctx.size(), p, virrel(), g), Term::irrel()));
  Value bogus_proof = vne(Neutral{NeVar{0}, p, {}});
  CHECK(term_equal(quote(ctx.size(), p, bogus_proof, g), Term::irrel()));
}

TEST_CASE("quote eta-expands at products") {
  // In a context with one variable f : (X : U1) -> U1, quoting f itself
  // produces its eta-long form with annotated application.
  GlobalEnv g;
  TypingContext ctx = mk_ctx({{"f", Term::pi(u(1), u(1))}}, g);
  Env env = id_env(ctx, g);
  Value f = env.lookup(0);
  Value fty = ctx.entry(0).type_value;
  Term expected =
      Term::lam(u(1), u(1), Term::app(u(1), u(1), Term::var(1), Term::var(0)));
  CHECK(term_equal(quote(1, fty, f, g), expected));
}

TEST_CASE("identity environment") {
  CHECK(id_env(TypingContext{}, kEmpty).size() == 0);

  GlobalEnv g;
  TypingContext ctx1 = mk_ctx({{"X", u(1)}}, g);
  Env env1 = id_env(ctx1, g);
  REQUIRE(env1.size() == 1);
  REQUIRE(value_as<VNe>(env1.lookup(0)));
  CHECK(std::get<NeVar>(value_as<VNe>(env1.lookup(0))->neutral.head).level == 0);

  // [P : Prop, p : P]: the proof slot reflects to the irrelevant point.
  TypingContext ctx2 = mk_ctx({{"P", u(0)}, {"p", Term::var(0)}}, g);
  Env env2 = id_env(ctx2, g);
  REQUIRE(env2.size() == 2);
  CHECK(value_as<VNe>(env2.lookup(1)));
  CHECK(value_as<VIrrel>(env2.lookup(0)));
}

TEST_CASE("normal forms") {
  // Beta at the top level.
  Term redex = Term::app(u(2), u(2), Term::lam(u(2), u(2), Term::var(0)), u(0));
  CHECK(term_equal(normalize(TypingContext{}, redex, u(2), kEmpty), u(0)));

  // Proofs collapse to the constant 0.
  GlobalEnv g;
  TypingContext ctx = mk_ctx({{"P", u(0)}, {"p", Term::var(0)}}, g);
  CHECK(term_equal(normalize(ctx, Term::var(0), Term::var(1), g), Term::irrel()));

  // An axiom of product type normalizes to its eta-long form.
  GlobalEnv g2;
  add_axiom(g2, "f", Term::pi(u(1), u(1)));
  Term eta = normalize(TypingContext{}, Term::constant("f"), Term::pi(u(1), u(1)), g2);
  Term expected =
      Term::lam(u(1), u(1), Term::app(u(1), u(1), Term::constant("f"), Term::var(0)));
  CHECK(term_equal(eta, expected));

  // Normalization is idempotent on these.
  CHECK(term_equal(normalize(TypingContext{}, eta, Term::pi(u(1), u(1)), g2), eta));
}

TEST_CASE("beta law against the substitution route") {
  // nf (App (Lam b) a) = nf (b[a]) for a closed well-typed instance:
  // b = (pi v0 v1) over X : U1, a = U0, at type U2.
  Term body = Term::pi(Term::var(0), Term::var(1));
  Term lam = Term::lam(u(1), u(2), body);
  Term arg = u(0);
  Term redex = Term::app(u(1), u(2), lam, arg);
  Term via_eval = normalize(TypingContext{}, redex, u(2), kEmpty);
  Term via_subst = normalize(TypingContext{}, subst_apply(body, SyntacticSubst::extend_id(arg, 0)),
                             u(2), kEmpty);
  CHECK(term_equal(via_eval, via_subst));
  CHECK(term_equal(via_eval, Term::pi(u(0), u(0))));
}

TEST_CASE("conversion") {
  GlobalEnv g;
  add_axiom(g, "P", u(0));
  Value p = eval(Env{}, Term::constant("P"), g);
  add_axiom(g, "p1", Term::constant("P"));
  add_axiom(g, "p2", Term::constant("P"));

  // Distinct proofs of the same proposition are convertible.
  Value v1 = eval(Env{}, Term::constant("p1"), g);
  Value v2 = eval(Env{}, Term::constant("p2"), g);
  CHECK(convertible(0, p, v1, v2, g));

  // A type is convertible with itself.
  Value big = eval(Env{}, Term::pi(u(1), Term::var(0)), g);
  CHECK(convertible(0, vu(2), big, big, g));

  // Beta under a binder: fun x => (fun y => y) x is fun x => x.
  Term inner_id = Term::lam(u(1), u(1), Term::var(0));
  Term outer = Term::lam(u(1), u(1), Term::app(u(1), u(1), rename(inner_id, 0, 1),
                                               Term::var(0)));
  Term plain_id = Term::lam(u(1), u(1), Term::var(0));
  Value ty = eval(Env{}, Term::pi(u(1), u(1)), g);
  CHECK(convertible(0, ty, eval(Env{}, outer, g), eval(Env{}, plain_id, g), g));

  // Distinct propositions are not convertible as codes.
  add_axiom(g, "Q", u(0));
  Value q = eval(Env{}, Term::constant("Q"), g);
  CHECK_FALSE(convertible(0, vu(0), p, q, g));
}

TEST_CASE("subtyping is one-directional cumulativity") {
  CHECK(is_subtype(0, vu(0), vu(1), kEmpty));
  CHECK_FALSE(is_subtype(0, vu(1), vu(0), kEmpty));
  CHECK(is_subtype(0, vu(2), vu(2), kEmpty));

  // Products: invariant domain, covariant codomain.
  GlobalEnv g;
  Value pi_small = eval(Env{}, Term::pi(u(1), u(0)), g);
  Value pi_big = eval(Env{}, Term::pi(u(1), u(3)), g);
  CHECK(is_subtype(0, pi_small, pi_big, g));
  CHECK_FALSE(is_subtype(0, pi_big, pi_small, g));
  Value pi_other_dom = eval(Env{}, Term::pi(u(2), u(0)), g);
  CHECK_FALSE(is_subtype(0, pi_small, pi_other_dom, g));

  // Mixed shapes are never related.
  CHECK_FALSE(is_subtype(0, pi_small, vu(5), g));
}

TEST_CASE("product codes are injective on normal forms") {
  // Structural equality of Pi codes decomposes into component equality.
  Term a = Term::pi(u(1), Term::var(0));
  Term b = Term::pi(u(1), u(1));
  CHECK_FALSE(term_equal(a, b));
  CHECK(term_equal(a, Term::pi(u(1), Term::var(0))));
}
