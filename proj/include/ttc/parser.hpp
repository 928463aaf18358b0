#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ttc {

/// 1-based position in the source text.
struct Span {
  std::uint32_t line = 0;
  std::uint32_t col = 0;
};

struct RawNode;

/// Surface term as written, names unresolved. Copies share the tree.
class RawTerm {
 public:
  RawTerm() = default;
  RawTerm(RawNode node, Span span);

  const RawNode& node() const { return *node_; }
  Span span() const { return span_; }
  explicit operator bool() const { return node_ != nullptr; }

 private:
  std::shared_ptr<const RawNode> node_;
  Span span_;
};

struct RVar {
  std::string name;
};

struct RUniv {
  std::uint32_t level;  // Prop parses as level 0
};

struct RPi {
  std::string name;
  RawTerm dom;
  RawTerm cod;
};

/// Non-dependent arrow sugar; the codomain does not see a binder.
struct RArrow {
  RawTerm dom;
  RawTerm cod;
};

struct RLam {
  std::string name;
  RawTerm annot;
  RawTerm body;
};

struct RApp {
  RawTerm fn;
  RawTerm arg;
};

struct RawNode {
  std::variant<RVar, RUniv, RPi, RArrow, RLam, RApp> data;
};

template <typename T>
const T* raw_as(const RawTerm& t) {
  return std::get_if<T>(&t.node().data);
}

struct RawDecl {
  enum class Kind { Definition, Axiom };
  Kind kind;
  std::string name;
  RawTerm type;
  std::optional<RawTerm> body;  // present iff definition
  Span span;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, Span span) : std::runtime_error(std::move(msg)), span(span) {}
  Span span;
};

/// Parses a declaration file: `def NAME : TERM := TERM .` and
/// `axiom NAME : TERM .`, with `--` line comments. Duplicate names are
/// rejected here.
std::vector<RawDecl> parse_file(const std::string& text);

/// Parses a single term followed by end of input.
RawTerm parse_term(const std::string& text);

}  // namespace ttc
