#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ttc {

/// Universe index. The universe code for level n itself lives at level n+1.
using Level = std::uint32_t;

struct TermNode;

/// Immutable, fully annotated core term over de Bruijn indices.
/// Copies are cheap handles to a shared tree.
class Term {
 public:
  Term() = default;

  static Term var(std::uint32_t index);
  static Term univ(Level level);
  static Term pi(Term dom, Term cod);
  static Term lam(Term dom, Term cod, Term body);
  static Term app(Term dom, Term cod, Term fn, Term arg);
  static Term irrel();
  static Term constant(std::string name);

  const TermNode& node() const { return *node_; }
  bool same_node(const Term& other) const { return node_ == other.node_; }
  explicit operator bool() const { return node_ != nullptr; }

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

/// Bound or free variable, as an index relative to the innermost binder.
struct Var {
  std::uint32_t index;
};

/// Universe code U_level.
struct Univ {
  Level level;
};

/// Dependent product; `cod` is scoped under one extra binder.
struct Pi {
  Term dom;
  Term cod;
};

/// Abstraction annotated with its domain and codomain codes; `cod` and
/// `body` are scoped under one extra binder.
struct Lam {
  Term dom;
  Term cod;
  Term body;
};

/// Application annotated with the product type it happens at; `cod` is
/// scoped under one extra binder.
struct App {
  Term dom;
  Term cod;
  Term fn;
  Term arg;
};

/// The canonical inhabitant of any proof-irrelevant (sort 0) type.
struct Irrel {};

/// Reference to a global axiom or definition. Opaque to substitution.
struct Const {
  std::string name;
};

struct TermNode {
  std::variant<Var, Univ, Pi, Lam, App, Irrel, Const> data;
};

template <typename T>
const T* term_as(const Term& t) {
  return std::get_if<T>(&t.node().data);
}

/// Structural equality, annotations and universe levels included.
bool term_equal(const Term& a, const Term& b);

/// Shifts every free index >= cutoff up by amount.
Term rename(const Term& t, std::uint32_t cutoff, std::uint32_t amount);

/// Simultaneous substitution Delta ->_S Gamma, represented as the list of
/// replacement terms for the variables of Gamma. The entries live over the
/// source context Delta of length `source_len`.
struct SyntacticSubst {
  std::vector<Term> entries;  // entries[i] replaces Var i
  std::uint32_t source_len = 0;

  /// Maps Var i to Var i for all i < n.
  static SyntacticSubst identity(std::uint32_t n);
  /// Weakening Gamma.A ->_S Gamma for Gamma of length n: Var i -> Var i+1.
  static SyntacticSubst weaken(std::uint32_t n);
  /// (id, a): Gamma ->_S Gamma.A, substituting `a` for the last binder.
  static SyntacticSubst extend_id(Term a, std::uint32_t n);
};

/// Capture-avoiding application of a substitution; total on well-scoped input.
Term subst_apply(const Term& t, const SyntacticSubst& s);

/// Composition: entry i of the result is subst_apply(a.entries[i], b).
SyntacticSubst subst_compose(const SyntacticSubst& a, const SyntacticSubst& b);

bool subst_equal(const SyntacticSubst& a, const SyntacticSubst& b);

}  // namespace ttc
