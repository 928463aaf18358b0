#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ttc/syntax.hpp"

namespace ttc {

struct ValueNode;

/// Immutable semantic value. Copies share structure.
class Value {
 public:
  Value() = default;

  const ValueNode& node() const { return *node_; }
  explicit operator bool() const { return node_ != nullptr; }

  static Value make(ValueNode node);

 private:
  explicit Value(std::shared_ptr<const ValueNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ValueNode> node_;
};

/// Evaluation environment: the value of Var i is the i-th most recent entry.
/// Persistent; extension shares the tail, so closures capture it cheaply.
class Env {
 public:
  Env() = default;

  Env extended(Value v) const {
    Env e;
    e.head_ = std::make_shared<const Node>(Node{std::move(v), head_});
    e.size_ = size_ + 1;
    return e;
  }

  const Value& lookup(std::uint32_t index) const {
    const Node* n = head_.get();
    for (std::uint32_t i = 0; i < index && n; ++i) n = n->next.get();
    if (!n) throw std::logic_error("internal error: environment lookup out of range");
    return n->value;
  }

  std::uint32_t size() const { return size_; }

 private:
  struct Node {
    Value value;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
  std::uint32_t size_ = 0;
};

/// A term scoped under one binder, paired with the environment it closed over.
struct Closure {
  Env env;
  Term body;
};

/// Free variable identified by its de Bruijn level (context-absolute).
struct NeVar {
  std::uint32_t level;
};

/// Head of a blocked application: a free variable or a global axiom.
using NeutralHead = std::variant<NeVar, std::string>;

/// One application step, remembering the product type it happened at so the
/// annotated application node can be rebuilt when quoting.
struct SpineEntry {
  Value arg;
  Value dom;
  Closure cod;
};

struct Neutral {
  NeutralHead head;
  Value head_type;
  std::vector<SpineEntry> spine;
};

struct VU {
  Level level;
};

struct VPi {
  Value dom;
  Closure cod;
};

struct VLam {
  Closure body;
};

/// The unique semantic inhabitant of every sort-0 type.
struct VIrrel {};

struct VNe {
  Neutral neutral;
};

struct ValueNode {
  std::variant<VU, VPi, VLam, VIrrel, VNe> data;
};

inline Value Value::make(ValueNode node) {
  return Value(std::make_shared<const ValueNode>(std::move(node)));
}

template <typename T>
const T* value_as(const Value& v) {
  return std::get_if<T>(&v.node().data);
}

inline Value vu(Level level) { return Value::make(ValueNode{VU{level}}); }
inline Value vpi(Value dom, Closure cod) {
  return Value::make(ValueNode{VPi{std::move(dom), std::move(cod)}});
}
inline Value vlam(Closure body) { return Value::make(ValueNode{VLam{std::move(body)}}); }
inline Value virrel() { return Value::make(ValueNode{VIrrel{}}); }
inline Value vne(Neutral n) { return Value::make(ValueNode{VNe{std::move(n)}}); }

}  // namespace ttc
