#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ttc/syntax.hpp"
#include "ttc/value.hpp"

namespace ttc {

/// Global axiom: a postulated constant of the given type.
struct AxiomDecl {
  Term type_core;
  Value type_value;
  Level sort;
};

/// Global definition; transparent, unfolded eagerly during evaluation.
struct DefDecl {
  Term type_core;
  Value type_value;
  Level sort;
  Term body_core;
  Value body_value;
};

struct Decl {
  std::string name;
  std::variant<AxiomDecl, DefDecl> data;

  const Term& type_core() const;
  const Value& type_value() const;
  Level sort() const;
  bool is_axiom() const { return std::holds_alternative<AxiomDecl>(data); }
};

/// Ordered collection of checked global declarations, each elaborated against
/// only the earlier ones. Names are unique.
class GlobalEnv {
 public:
  const Decl* lookup(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &decls_[it->second];
  }

  void add(Decl decl);

  const std::vector<Decl>& decls() const { return decls_; }
  std::size_t size() const { return decls_.size(); }

 private:
  std::vector<Decl> decls_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline const Term& Decl::type_core() const {
  return is_axiom() ? std::get<AxiomDecl>(data).type_core : std::get<DefDecl>(data).type_core;
}
inline const Value& Decl::type_value() const {
  return is_axiom() ? std::get<AxiomDecl>(data).type_value : std::get<DefDecl>(data).type_value;
}
inline Level Decl::sort() const {
  return is_axiom() ? std::get<AxiomDecl>(data).sort : std::get<DefDecl>(data).sort;
}

struct ContextEntry {
  std::string name;
  Term type_core;   // well-scoped in the entries before this one
  Value type_value;  // evaluated in the identity environment of the prefix
  Level sort;
};

/// Telescope of declared types. Entry 0 is the outermost binder; Var i of a
/// term over the context refers to entry size()-1-i.
class TypingContext {
 public:
  TypingContext() = default;

  TypingContext extended(ContextEntry entry) const {
    TypingContext c(*this);
    c.entries_.push_back(std::move(entry));
    return c;
  }

  const ContextEntry& entry(std::uint32_t i) const { return entries_.at(i); }
  std::uint32_t size() const { return static_cast<std::uint32_t>(entries_.size()); }

  /// Innermost-first lookup; returns the de Bruijn index of the match.
  std::optional<std::uint32_t> lookup_name(const std::string& name) const {
    if (name.empty()) return std::nullopt;
    for (std::uint32_t i = size(); i-- > 0;)
      if (entries_[i].name == name) return size() - 1 - i;
    return std::nullopt;
  }

 private:
  std::vector<ContextEntry> entries_;
};

}  // namespace ttc
