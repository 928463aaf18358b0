#include "ttc/syntax.hpp"

#include <stdexcept>
#include <utility>

namespace ttc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Term Term::var(std::uint32_t index) {
  return Term(std::make_shared<const TermNode>(TermNode{Var{index}}));
}

Term Term::univ(Level level) {
  return Term(std::make_shared<const TermNode>(TermNode{Univ{level}}));
}

Term Term::pi(Term dom, Term cod) {
  return Term(std::make_shared<const TermNode>(TermNode{Pi{std::move(dom), std::move(cod)}}));
}

Term Term::lam(Term dom, Term cod, Term body) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Lam{std::move(dom), std::move(cod), std::move(body)}}));
}

Term Term::app(Term dom, Term cod, Term fn, Term arg) {
  return Term(std::make_shared<const TermNode>(
      TermNode{App{std::move(dom), std::move(cod), std::move(fn), std::move(arg)}}));
}

Term Term::irrel() {
  static const Term point(std::make_shared<const TermNode>(TermNode{Irrel{}}));
  return point;
}

Term Term::constant(std::string name) {
  return Term(std::make_shared<const TermNode>(TermNode{Const{std::move(name)}}));
}

bool term_equal(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  const auto& da = a.node().data;
  const auto& db = b.node().data;
  if (da.index() != db.index()) return false;
  return std::visit(
      Overloaded{
          [&](const Var& v) { return v.index == std::get<Var>(db).index; },
          [&](const Univ& u) { return u.level == std::get<Univ>(db).level; },
          [&](const Pi& p) {
            const auto& q = std::get<Pi>(db);
            return term_equal(p.dom, q.dom) && term_equal(p.cod, q.cod);
          },
          [&](const Lam& l) {
            const auto& m = std::get<Lam>(db);
            return term_equal(l.dom, m.dom) && term_equal(l.cod, m.cod) &&
                   term_equal(l.body, m.body);
          },
          [&](const App& f) {
            const auto& g = std::get<App>(db);
            return term_equal(f.dom, g.dom) && term_equal(f.cod, g.cod) &&
                   term_equal(f.fn, g.fn) && term_equal(f.arg, g.arg);
          },
          [&](const Irrel&) { return true; },
          [&](const Const& c) { return c.name == std::get<Const>(db).name; },
      },
      da);
}

Term rename(const Term& t, std::uint32_t cutoff, std::uint32_t amount) {
  if (amount == 0) return t;
  return std::visit(
      Overloaded{
          [&](const Var& v) {
            return v.index >= cutoff ? Term::var(v.index + amount) : t;
          },
          [&](const Univ&) { return t; },
          [&](const Pi& p) {
            return Term::pi(rename(p.dom, cutoff, amount), rename(p.cod, cutoff + 1, amount));
          },
          [&](const Lam& l) {
            return Term::lam(rename(l.dom, cutoff, amount), rename(l.cod, cutoff + 1, amount),
                             rename(l.body, cutoff + 1, amount));
          },
          [&](const App& f) {
            return Term::app(rename(f.dom, cutoff, amount), rename(f.cod, cutoff + 1, amount),
                             rename(f.fn, cutoff, amount), rename(f.arg, cutoff, amount));
          },
          [&](const Irrel&) { return t; },
          [&](const Const&) { return t; },
      },
      t.node().data);
}

SyntacticSubst SyntacticSubst::identity(std::uint32_t n) {
  SyntacticSubst s;
  s.entries.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) s.entries.push_back(Term::var(i));
  s.source_len = n;
  return s;
}

SyntacticSubst SyntacticSubst::weaken(std::uint32_t n) {
  SyntacticSubst s;
  s.entries.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) s.entries.push_back(Term::var(i + 1));
  s.source_len = n + 1;
  return s;
}

SyntacticSubst SyntacticSubst::extend_id(Term a, std::uint32_t n) {
  SyntacticSubst s;
  s.entries.reserve(n + 1);
  s.entries.push_back(std::move(a));
  for (std::uint32_t i = 0; i < n; ++i) s.entries.push_back(Term::var(i));
  s.source_len = n;
  return s;
}

namespace {

// Lifts a substitution under one binder: the new Var 0 is kept fixed and
// every entry moves out of the way of the binder.
SyntacticSubst lift(const SyntacticSubst& s) {
  SyntacticSubst up;
  up.entries.reserve(s.entries.size() + 1);
  up.entries.push_back(Term::var(0));
  for (const Term& e : s.entries) up.entries.push_back(rename(e, 0, 1));
  up.source_len = s.source_len + 1;
  return up;
}

}  // namespace

Term subst_apply(const Term& t, const SyntacticSubst& s) {
  return std::visit(
      Overloaded{
          [&](const Var& v) {
            if (v.index >= s.entries.size())
              throw std::logic_error("internal error: substitution applied to ill-scoped term");
            return s.entries[v.index];
          },
          [&](const Univ&) { return t; },
          [&](const Pi& p) {
            SyntacticSubst up = lift(s);
            return Term::pi(subst_apply(p.dom, s), subst_apply(p.cod, up));
          },
          [&](const Lam& l) {
            SyntacticSubst up = lift(s);
            return Term::lam(subst_apply(l.dom, s), subst_apply(l.cod, up),
                             subst_apply(l.body, up));
          },
          [&](const App& f) {
            SyntacticSubst up = lift(s);
            return Term::app(subst_apply(f.dom, s), subst_apply(f.cod, up),
                             subst_apply(f.fn, s), subst_apply(f.arg, s));
          },
          [&](const Irrel&) { return t; },
          [&](const Const&) { return t; },
      },
      t.node().data);
}

SyntacticSubst subst_compose(const SyntacticSubst& a, const SyntacticSubst& b) {
  if (a.source_len != b.entries.size())
    throw std::logic_error("internal error: composing substitutions over mismatched contexts");
  SyntacticSubst c;
  c.entries.reserve(a.entries.size());
  for (const Term& e : a.entries) c.entries.push_back(subst_apply(e, b));
  c.source_len = b.source_len;
  return c;
}

bool subst_equal(const SyntacticSubst& a, const SyntacticSubst& b) {
  if (a.source_len != b.source_len || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!term_equal(a.entries[i], b.entries[i])) return false;
  return true;
}

}  // namespace ttc
