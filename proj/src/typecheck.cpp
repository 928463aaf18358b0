#include "ttc/typecheck.hpp"

#include <utility>

#include "ttc/pretty.hpp"

namespace ttc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string> context_names(const TypingContext& ctx) {
  std::vector<std::string> names;
  names.reserve(ctx.size());
  for (std::uint32_t i = 0; i < ctx.size(); ++i) names.push_back(ctx.entry(i).name);
  return names;
}

std::string show_type(const TypingContext& ctx, const Value& ty, const GlobalEnv& globals) {
  return pretty(quote_type(ctx.size(), ty, globals), context_names(ctx), false);
}

// Elaborates a term that must denote a type; returns its core together with
// the universe level it was inferred at.
struct TypeResult {
  Term core;
  Value value;
  Level universe;
};

ElabResult infer_lambda(const TypingContext& ctx, const Env& env, const RawTerm& raw,
                        const GlobalEnv& globals);

TypeResult infer_type(const TypingContext& ctx, const Env& env, const RawTerm& raw,
                      const GlobalEnv& globals) {
  ElabResult r = infer(ctx, env, raw, globals);
  const VU* u = value_as<VU>(r.type);
  if (!u)
    throw TypeError("expected a type, but this term has type " +
                        show_type(ctx, r.type, globals),
                    raw.span());
  return TypeResult{r.core, eval(env, r.core, globals), u->level};
}

// Shared elaboration of binders: (x : dom) -> cod and fun (x : dom) => body
// both extend the context with a fresh reflected variable.
struct BinderScope {
  TypingContext ctx;
  Env env;
};

BinderScope extend(const TypingContext& ctx, const Env& env, const std::string& name,
                   const Term& dom_core, const Value& dom_value, const GlobalEnv& globals) {
  Level sort = sort_of(dom_value, ctx.size(), globals);
  TypingContext inner =
      ctx.extended(ContextEntry{name, dom_core, dom_value, sort});
  Env inner_env = env.extended(reflect_fresh(dom_value, ctx.size(), globals));
  return BinderScope{std::move(inner), std::move(inner_env)};
}

ElabResult infer_pi(const TypingContext& ctx, const Env& env, const std::string& name,
                    const RawTerm& dom, const RawTerm& cod, Span span,
                    const GlobalEnv& globals) {
  TypeResult d = infer_type(ctx, env, dom, globals);
  BinderScope scope = extend(ctx, env, name, d.core, d.value, globals);
  TypeResult c = infer_type(scope.ctx, scope.env, cod, globals);
  Term core = Term::pi(d.core, c.core);
  Level sort = sort_of(eval(env, core, globals), ctx.size(), globals);
  (void)span;
  return ElabResult{core, vu(sort)};
}

ElabResult infer_app(const TypingContext& ctx, const Env& env, const RApp& app, Span span,
                     const GlobalEnv& globals) {
  ElabResult fn = raw_as<RLam>(app.fn) ? infer_lambda(ctx, env, app.fn, globals)
                                       : infer(ctx, env, app.fn, globals);
  const VPi* pi = value_as<VPi>(fn.type);
  if (!pi)
    throw TypeError("cannot apply a term of type " + show_type(ctx, fn.type, globals),
                    span);
  Term arg = check(ctx, env, app.arg, pi->dom, globals);
  Value arg_value = eval(env, arg, globals);
  Term dom_code = quote_type(ctx.size(), pi->dom, globals);
  Value fresh = reflect_fresh(pi->dom, ctx.size(), globals);
  Term cod_code = quote_type(ctx.size() + 1, instantiate(pi->cod, fresh, globals), globals);
  Value result = instantiate(pi->cod, arg_value, globals);
  return ElabResult{Term::app(dom_code, cod_code, fn.core, arg), result};
}

// A lambda whose body is itself inferable. Only reachable from application
// heads; the binder annotation supplies the domain and the codomain is read
// back from the inferred body type.
ElabResult infer_lambda(const TypingContext& ctx, const Env& env, const RawTerm& raw,
                        const GlobalEnv& globals) {
  const RLam& lam = *raw_as<RLam>(raw);
  TypeResult annot = infer_type(ctx, env, lam.annot, globals);
  Term dom_code = quote_type(ctx.size(), annot.value, globals);
  BinderScope scope = extend(ctx, env, lam.name, dom_code, annot.value, globals);
  ElabResult body = raw_as<RLam>(lam.body) ? infer_lambda(scope.ctx, scope.env, lam.body, globals)
                                           : infer(scope.ctx, scope.env, lam.body, globals);
  Term cod_code = quote_type(ctx.size() + 1, body.type, globals);
  Value pi = vpi(annot.value, Closure{env, cod_code});
  return ElabResult{Term::lam(dom_code, cod_code, body.core), pi};
}

}  // namespace

ElabResult infer(const TypingContext& ctx, const Env& env, const RawTerm& raw,
                 const GlobalEnv& globals) {
  return std::visit(
      Overloaded{
          [&](const RVar& v) -> ElabResult {
            if (auto index = ctx.lookup_name(v.name)) {
              const ContextEntry& entry = ctx.entry(ctx.size() - 1 - *index);
              return ElabResult{Term::var(*index), entry.type_value};
            }
            if (const Decl* d = globals.lookup(v.name))
              return ElabResult{Term::constant(v.name), d->type_value()};
            throw TypeError("unbound name '" + v.name + "'", raw.span());
          },
          [&](const RUniv& u) -> ElabResult {
            return ElabResult{Term::univ(u.level), vu(u.level + 1)};
          },
          [&](const RPi& p) -> ElabResult {
            return infer_pi(ctx, env, p.name, p.dom, p.cod, raw.span(), globals);
          },
          [&](const RArrow& a) -> ElabResult {
            return infer_pi(ctx, env, "", a.dom, a.cod, raw.span(), globals);
          },
          [&](const RLam&) -> ElabResult {
            throw TypeError(
                "cannot infer the type of a lambda here; bind it with 'def' and a type "
                "ascription, or use it in a checked position",
                raw.span());
          },
          [&](const RApp& a) -> ElabResult {
            return infer_app(ctx, env, a, raw.span(), globals);
          },
      },
      raw.node().data);
}

Term check(const TypingContext& ctx, const Env& env, const RawTerm& raw, const Value& expected,
           const GlobalEnv& globals) {
  if (const RLam* lam = raw_as<RLam>(raw)) {
    const VPi* pi = value_as<VPi>(expected);
    if (!pi)
      throw TypeError("lambda cannot have the non-function type " +
                          show_type(ctx, expected, globals),
                      raw.span());
    TypeResult annot = infer_type(ctx, env, lam->annot, globals);
    Term dom_code = quote_type(ctx.size(), pi->dom, globals);
    if (!term_equal(quote_type(ctx.size(), annot.value, globals), dom_code))
      throw TypeError("binder annotation " + show_type(ctx, annot.value, globals) +
                          " does not match the expected domain " +
                          show_type(ctx, pi->dom, globals),
                      lam->annot.span());
    BinderScope scope = extend(ctx, env, lam->name, dom_code, pi->dom, globals);
    Value fresh = scope.env.lookup(0);
    Value cod = instantiate(pi->cod, fresh, globals);
    Term cod_code = quote_type(ctx.size() + 1, cod, globals);
    Term body = check(scope.ctx, scope.env, lam->body, cod, globals);
    return Term::lam(dom_code, cod_code, body);
  }
  ElabResult r = infer(ctx, env, raw, globals);
  if (!is_subtype(ctx.size(), r.type, expected, globals))
    throw TypeError("type mismatch: expected " + show_type(ctx, expected, globals) +
                        ", but this term has type " + show_type(ctx, r.type, globals),
                    raw.span());
  return r.core;
}

void check_decl(GlobalEnv& globals, const RawDecl& decl) {
  try {
    if (globals.lookup(decl.name))
      throw TypeError("duplicate declaration name '" + decl.name + "'", decl.span);
    TypingContext ctx;
    Env env;
    TypeResult type = infer_type(ctx, env, decl.type, globals);
    Level sort = sort_of(type.value, 0, globals);
    if (decl.kind == RawDecl::Kind::Axiom) {
      globals.add(Decl{decl.name, AxiomDecl{type.core, type.value, sort}});
      return;
    }
    Term body = check(ctx, env, *decl.body, type.value, globals);
    Value body_value = eval(env, body, globals);
    globals.add(Decl{decl.name, DefDecl{type.core, type.value, sort, body, body_value}});
  } catch (const TypeError& e) {
    throw TypeError("in declaration '" + decl.name + "': " + e.what(), e.span);
  }
}

namespace {

Value infer_core_type(const TypingContext& ctx, const Env& env, const Term& t, Level& universe,
                      const GlobalEnv& globals) {
  Value ty = infer_core(ctx, env, t, globals);
  const VU* u = value_as<VU>(ty);
  if (!u) throw TypeError("core term is not a type", Span{});
  universe = u->level;
  return eval(env, t, globals);
}

BinderScope extend_core(const TypingContext& ctx, const Env& env, const Term& dom_core,
                        const Value& dom_value, const GlobalEnv& globals) {
  return extend(ctx, env, "", dom_core, dom_value, globals);
}

}  // namespace

Value infer_core(const TypingContext& ctx, const Env& env, const Term& t,
                 const GlobalEnv& globals) {
  return std::visit(
      Overloaded{
          [&](const Var& v) -> Value {
            if (v.index >= ctx.size()) throw TypeError("core variable out of scope", Span{});
            return ctx.entry(ctx.size() - 1 - v.index).type_value;
          },
          [&](const Univ& u) -> Value { return vu(u.level + 1); },
          [&](const Pi& p) -> Value {
            Level dom_universe = 0;
            Value dom_value = infer_core_type(ctx, env, p.dom, dom_universe, globals);
            BinderScope scope = extend_core(ctx, env, p.dom, dom_value, globals);
            Level cod_universe = 0;
            infer_core_type(scope.ctx, scope.env, p.cod, cod_universe, globals);
            return vu(sort_of(eval(env, t, globals), ctx.size(), globals));
          },
          [&](const Lam& l) -> Value {
            Level dom_universe = 0;
            Value dom_value = infer_core_type(ctx, env, l.dom, dom_universe, globals);
            BinderScope scope = extend_core(ctx, env, l.dom, dom_value, globals);
            Level cod_universe = 0;
            Value cod_value = infer_core_type(scope.ctx, scope.env, l.cod, cod_universe, globals);
            check_core(scope.ctx, scope.env, l.body, cod_value, globals);
            return vpi(dom_value, Closure{env, l.cod});
          },
          [&](const App& a) -> Value {
            Level dom_universe = 0;
            Value dom_value = infer_core_type(ctx, env, a.dom, dom_universe, globals);
            BinderScope scope = extend_core(ctx, env, a.dom, dom_value, globals);
            Level cod_universe = 0;
            infer_core_type(scope.ctx, scope.env, a.cod, cod_universe, globals);
            check_core(ctx, env, a.fn, vpi(dom_value, Closure{env, a.cod}), globals);
            check_core(ctx, env, a.arg, dom_value, globals);
            return instantiate(Closure{env, a.cod}, eval(env, a.arg, globals), globals);
          },
          [&](const Irrel&) -> Value {
            throw TypeError("the irrelevant constant has no inferable type", Span{});
          },
          [&](const Const& c) -> Value {
            const Decl* d = globals.lookup(c.name);
            if (!d) throw TypeError("unbound global '" + c.name + "'", Span{});
            return d->type_value();
          },
      },
      t.node().data);
}

void check_core(const TypingContext& ctx, const Env& env, const Term& t, const Value& expected,
                const GlobalEnv& globals) {
  if (term_as<Irrel>(t)) {
    if (sort_of(expected, ctx.size(), globals) != 0)
      throw TypeError("the irrelevant constant only inhabits sort-0 types", Span{});
    return;
  }
  Value inferred = infer_core(ctx, env, t, globals);
  if (!is_subtype(ctx.size(), inferred, expected, globals))
    throw TypeError("core type mismatch: expected " + show_type(ctx, expected, globals) +
                        ", inferred " + show_type(ctx, inferred, globals),
                    Span{});
}

}  // namespace ttc
