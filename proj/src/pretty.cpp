#include "ttc/pretty.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

namespace ttc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void print_annotated(const Term& t, std::string& out) {
  std::visit(
      Overloaded{
          [&](const Var& v) { out += "v" + std::to_string(v.index); },
          [&](const Univ& u) { out += "U" + std::to_string(u.level); },
          [&](const Pi& p) {
            out += "(pi ";
            print_annotated(p.dom, out);
            out += ' ';
            print_annotated(p.cod, out);
            out += ')';
          },
          [&](const Lam& l) {
            out += "(lam ";
            print_annotated(l.dom, out);
            out += ' ';
            print_annotated(l.cod, out);
            out += ' ';
            print_annotated(l.body, out);
            out += ')';
          },
          [&](const App& a) {
            out += "(app ";
            print_annotated(a.dom, out);
            out += ' ';
            print_annotated(a.cod, out);
            out += ' ';
            print_annotated(a.fn, out);
            out += ' ';
            print_annotated(a.arg, out);
            out += ')';
          },
          [&](const Irrel&) { out += '0'; },
          [&](const Const& c) { out += c.name; },
      },
      t.node().data);
}

bool uses_var0(const Term& t, std::uint32_t index = 0) {
  return std::visit(
      Overloaded{
          [&](const Var& v) { return v.index == index; },
          [&](const Univ&) { return false; },
          [&](const Pi& p) { return uses_var0(p.dom, index) || uses_var0(p.cod, index + 1); },
          [&](const Lam& l) {
            return uses_var0(l.dom, index) || uses_var0(l.cod, index + 1) ||
                   uses_var0(l.body, index + 1);
          },
          [&](const App& a) {
            return uses_var0(a.dom, index) || uses_var0(a.cod, index + 1) ||
                   uses_var0(a.fn, index) || uses_var0(a.arg, index);
          },
          [&](const Irrel&) { return false; },
          [&](const Const&) { return false; },
      },
      t.node().data);
}

// Precedence climbing: Term (pi, arrow, fun) < App < Atom.
enum Prec { PrecTerm = 0, PrecApp = 1, PrecAtom = 2 };

struct SurfacePrinter {
  std::vector<std::string> names;

  std::string fresh_name() {
    std::string candidate = "x" + std::to_string(names.size());
    while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += '\'';
    return candidate;
  }

  void print(const Term& t, Prec prec, std::string& out) {
    std::visit(
        Overloaded{
            [&](const Var& v) {
              if (v.index >= names.size())
                throw std::logic_error("internal error: printing an ill-scoped variable");
              out += names[names.size() - 1 - v.index];
            },
            [&](const Univ& u) {
              if (u.level == 0) {
                out += "Prop";
              } else if (prec >= PrecAtom) {
                out += "(U " + std::to_string(u.level) + ")";
              } else {
                out += "U " + std::to_string(u.level);
              }
            },
            [&](const Pi& p) {
              bool paren = prec > PrecTerm;
              if (paren) out += '(';
              if (uses_var0(p.cod)) {
                std::string name = fresh_name();
                out += '(';
                out += name;
                out += " : ";
                print(p.dom, PrecTerm, out);
                out += ") -> ";
                names.push_back(name);
                print(p.cod, PrecTerm, out);
                names.pop_back();
              } else {
                print(p.dom, PrecApp, out);
                out += " -> ";
                names.push_back("");
                print(p.cod, PrecTerm, out);
                names.pop_back();
              }
              if (paren) out += ')';
            },
            [&](const Lam& l) {
              bool paren = prec > PrecTerm;
              if (paren) out += '(';
              std::string name = fresh_name();
              out += "fun (";
              out += name;
              out += " : ";
              print(l.dom, PrecTerm, out);
              out += ") => ";
              names.push_back(name);
              print(l.body, PrecTerm, out);
              names.pop_back();
              if (paren) out += ')';
            },
            [&](const App& a) {
              bool paren = prec > PrecApp;
              if (paren) out += '(';
              print(a.fn, PrecApp, out);
              out += ' ';
              print(a.arg, PrecAtom, out);
              if (paren) out += ')';
            },
            [&](const Irrel&) { out += '0'; },
            [&](const Const& c) { out += c.name; },
        },
        t.node().data);
  }
};

}  // namespace

std::string pretty(const Term& t, const std::vector<std::string>& names, bool annotated) {
  std::string out;
  if (annotated) {
    print_annotated(t, out);
  } else {
    SurfacePrinter printer{names};
    printer.print(t, PrecTerm, out);
  }
  return out;
}

}  // namespace ttc
