#include "ttc/nbe.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void kernel_bug(const char* what) {
  throw std::logic_error(std::string("internal error: ") + what);
}

}  // namespace

void GlobalEnv::add(Decl decl) {
  if (index_.count(decl.name)) kernel_bug("duplicate global declaration");
  index_.emplace(decl.name, decls_.size());
  decls_.push_back(std::move(decl));
}

Value instantiate(const Closure& cl, const Value& arg, const GlobalEnv& globals) {
  return eval(cl.env.extended(arg), cl.body, globals);
}

Value eval(const Env& env, const Term& t, const GlobalEnv& globals) {
  return std::visit(
      Overloaded{
          [&](const Var& v) {
            if (v.index >= env.size()) kernel_bug("evaluating an ill-scoped variable");
            return env.lookup(v.index);
          },
          [&](const Univ& u) { return vu(u.level); },
          [&](const Pi& p) { return vpi(eval(env, p.dom, globals), Closure{env, p.cod}); },
          [&](const Lam& l) { return vlam(Closure{env, l.body}); },
          [&](const App& a) {
            return apply_value(eval(env, a.fn, globals), eval(env, a.arg, globals),
                               eval(env, a.dom, globals), Closure{env, a.cod}, globals);
          },
          [&](const Irrel&) { return virrel(); },
          [&](const Const& c) {
            const Decl* d = globals.lookup(c.name);
            if (!d) kernel_bug("unbound global constant");
            if (const auto* def = std::get_if<DefDecl>(&d->data)) return def->body_value;
            const auto& ax = std::get<AxiomDecl>(d->data);
            if (ax.sort == 0) return virrel();
            return vne(Neutral{c.name, ax.type_value, {}});
          },
      },
      t.node().data);
}

Value apply_value(const Value& fn, const Value& arg, const Value& dom, const Closure& cod,
                  const GlobalEnv& globals) {
  return std::visit(
      Overloaded{
          [&](const VLam& l) { return instantiate(l.body, arg, globals); },
          [&](const VNe& n) {
            Neutral grown = n.neutral;
            grown.spine.push_back(SpineEntry{arg, dom, cod});
            return vne(std::move(grown));
          },
          [&](const VIrrel&) { return virrel(); },
          [&](const VU&) -> Value { kernel_bug("applying a universe"); },
          [&](const VPi&) -> Value { kernel_bug("applying a product code"); },
      },
      fn.node().data);
}

namespace {

// Result type of a neutral: the codomain of its final application, or the
// head's declared type for an empty spine.
Value neutral_type(const Neutral& ne, const GlobalEnv& globals) {
  if (ne.spine.empty()) return ne.head_type;
  const SpineEntry& last = ne.spine.back();
  return instantiate(last.cod, last.arg, globals);
}

}  // namespace

Level sort_of(const Value& ty, std::uint32_t depth, const GlobalEnv& globals) {
  return std::visit(
      Overloaded{
          [&](const VU& u) { return u.level + 1; },
          [&](const VPi& p) {
            Value fresh = reflect_fresh(p.dom, depth, globals);
            Level cod_sort = sort_of(instantiate(p.cod, fresh, globals), depth + 1, globals);
            if (cod_sort == 0) return Level{0};
            return std::max(sort_of(p.dom, depth, globals), cod_sort);
          },
          [&](const VNe& n) {
            Value universe = neutral_type(n.neutral, globals);
            const VU* u = value_as<VU>(universe);
            if (!u) kernel_bug("sort requested for a non-type neutral");
            return u->level;
          },
          [&](const VLam&) -> Level { kernel_bug("sort requested for a lambda"); },
          [&](const VIrrel&) -> Level { kernel_bug("sort requested for the irrelevant point"); },
      },
      ty.node().data);
}

Value reflect_fresh(const Value& ty, std::uint32_t level, const GlobalEnv& globals) {
  if (sort_of(ty, level, globals) == 0) return virrel();
  return vne(Neutral{NeVar{level}, ty, {}});
}

namespace {

Term quote_neutral(std::uint32_t depth, const Neutral& ne, const GlobalEnv& globals) {
  Term acc = std::visit(
      Overloaded{
          [&](const NeVar& v) {
            if (v.level >= depth) kernel_bug("quoting a variable beyond the context");
            return Term::var(depth - 1 - v.level);
          },
          [&](const std::string& name) { return Term::constant(name); },
      },
      ne.head);
  for (const SpineEntry& step : ne.spine) {
    Term dom_code = quote_type(depth, step.dom, globals);
    Value fresh = reflect_fresh(step.dom, depth, globals);
    Term cod_code = quote_type(depth + 1, instantiate(step.cod, fresh, globals), globals);
    Term arg_code = quote(depth, step.dom, step.arg, globals);
    acc = Term::app(std::move(dom_code), std::move(cod_code), std::move(acc),
                    std::move(arg_code));
  }
  return acc;
}

}  // namespace

Term quote_type(std::uint32_t depth, const Value& ty, const GlobalEnv& globals) {
  return std::visit(
      Overloaded{
          [&](const VU& u) { return Term::univ(u.level); },
          [&](const VPi& p) {
            Term dom_code = quote_type(depth, p.dom, globals);
            Value fresh = reflect_fresh(p.dom, depth, globals);
            Term cod_code = quote_type(depth + 1, instantiate(p.cod, fresh, globals), globals);
            return Term::pi(std::move(dom_code), std::move(cod_code));
          },
          [&](const VNe& n) { return quote_neutral(depth, n.neutral, globals); },
          [&](const VLam&) -> Term { kernel_bug("quoting a lambda as a type"); },
          [&](const VIrrel&) -> Term { kernel_bug("quoting the irrelevant point as a type"); },
      },
      ty.node().data);
}

Term quote(std::uint32_t depth, const Value& ty, const Value& v, const GlobalEnv& globals) {
  if (sort_of(ty, depth, globals) == 0) return Term::irrel();
  return std::visit(
      Overloaded{
          [&](const VU&) { return quote_type(depth, v, globals); },
          [&](const VPi& p) {
            // Always eta-expand: every element of a relevant product reads
            // back as a lambda applied to a fresh variable.
            Term dom_code = quote_type(depth, p.dom, globals);
            Value fresh = reflect_fresh(p.dom, depth, globals);
            Value cod = instantiate(p.cod, fresh, globals);
            Term cod_code = quote_type(depth + 1, cod, globals);
            Value applied = apply_value(v, fresh, p.dom, p.cod, globals);
            Term body = quote(depth + 1, cod, applied, globals);
            return Term::lam(std::move(dom_code), std::move(cod_code), std::move(body));
          },
          [&](const VNe&) {
            const VNe* n = value_as<VNe>(v);
            if (!n) kernel_bug("non-neutral value at a neutral type");
            return quote_neutral(depth, n->neutral, globals);
          },
          [&](const VLam&) -> Term { kernel_bug("a lambda is not a type"); },
          [&](const VIrrel&) -> Term { kernel_bug("the irrelevant point is not a type"); },
      },
      ty.node().data);
}

Env id_env(const TypingContext& ctx, const GlobalEnv& globals) {
  Env env;
  for (std::uint32_t i = 0; i < ctx.size(); ++i)
    env = env.extended(reflect_fresh(ctx.entry(i).type_value, i, globals));
  return env;
}

Term normalize(const TypingContext& ctx, const Term& t, const Term& ty,
               const GlobalEnv& globals) {
  Env env = id_env(ctx, globals);
  Value ty_value = eval(env, ty, globals);
  return quote(ctx.size(), ty_value, eval(env, t, globals), globals);
}

bool convertible(std::uint32_t depth, const Value& ty, const Value& a, const Value& b,
                 const GlobalEnv& globals) {
  return term_equal(quote(depth, ty, a, globals), quote(depth, ty, b, globals));
}

bool is_subtype(std::uint32_t depth, const Value& a, const Value& b, const GlobalEnv& globals) {
  const VU* ua = value_as<VU>(a);
  const VU* ub = value_as<VU>(b);
  if (ua && ub) return ua->level <= ub->level;
  const VPi* pa = value_as<VPi>(a);
  const VPi* pb = value_as<VPi>(b);
  if (pa && pb) {
    if (!term_equal(quote_type(depth, pa->dom, globals), quote_type(depth, pb->dom, globals)))
      return false;
    Value fresh = reflect_fresh(pa->dom, depth, globals);
    return is_subtype(depth + 1, instantiate(pa->cod, fresh, globals),
                      instantiate(pb->cod, fresh, globals), globals);
  }
  return term_equal(quote_type(depth, a, globals), quote_type(depth, b, globals));
}

}  // namespace ttc
