#include "ttc/driver.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "ttc/nbe.hpp"
#include "ttc/parser.hpp"
#include "ttc/pretty.hpp"
#include "ttc/typecheck.hpp"

namespace ttc {

namespace {

std::string position(const std::string& origin, Span span) {
  return origin + ":" + std::to_string(span.line) + ":" + std::to_string(span.col);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void load_into(GlobalEnv& globals, const std::string& path) {
  std::string text = read_file(path);
  std::vector<RawDecl> decls;
  try {
    decls = parse_file(text);
  } catch (const ParseError& e) {
    throw ParseError(position(path, e.span) + ": " + e.what(), e.span);
  }
  for (const RawDecl& d : decls) {
    try {
      check_decl(globals, d);
    } catch (const TypeError& e) {
      throw TypeError(position(path, e.span) + ": " + e.what(), e.span);
    }
  }
}

ElabResult elaborate_expr(const std::string& expr, const GlobalEnv& globals) {
  RawTerm raw;
  try {
    raw = parse_term(expr);
  } catch (const ParseError& e) {
    throw ParseError(position("<expr>", e.span) + ": " + e.what(), e.span);
  }
  try {
    return infer(TypingContext{}, Env{}, raw, globals);
  } catch (const TypeError& e) {
    throw TypeError(position("<expr>", e.span) + ": " + e.what(), e.span);
  }
}

int run_check(const Invocation& inv, const GlobalEnv& globals, std::ostream& out) {
  if (!inv.quiet) out << "ok: " << globals.size() << " declarations\n";
  return 0;
}

int run_nf(const Invocation& inv, const GlobalEnv& globals, std::ostream& out) {
  ElabResult r = elaborate_expr(inv.exprs.at(0), globals);
  Term normal = quote(0, r.type, eval(Env{}, r.core, globals), globals);
  out << pretty(normal, {}, inv.annotated) << "\n";
  return 0;
}

int run_infer(const Invocation& inv, const GlobalEnv& globals, std::ostream& out) {
  ElabResult r = elaborate_expr(inv.exprs.at(0), globals);
  Term type_code = quote_type(0, r.type, globals);
  out << pretty(type_code, {}, inv.annotated) << "\n";
  out << "sort: " << sort_of(r.type, 0, globals) << "\n";
  return 0;
}

int run_conv(const Invocation& inv, const GlobalEnv& globals, std::ostream& out,
             std::ostream& err) {
  ElabResult a = elaborate_expr(inv.exprs.at(0), globals);
  ElabResult b = elaborate_expr(inv.exprs.at(1), globals);
  Value at;
  if (is_subtype(0, a.type, b.type, globals)) {
    at = a.type;
  } else if (is_subtype(0, b.type, a.type, globals)) {
    at = b.type;
  } else {
    err << "conv: the two terms have incompatible types: "
        << pretty(quote_type(0, a.type, globals), {}, false) << " versus "
        << pretty(quote_type(0, b.type, globals), {}, false) << "\n";
    return 3;
  }
  Value va = eval(Env{}, a.core, globals);
  Value vb = eval(Env{}, b.core, globals);
  if (convertible(0, at, va, vb, globals)) {
    out << "equal\n";
    return 0;
  }
  out << "not-equal\n";
  return 4;
}

}  // namespace

GlobalEnv load_files(const std::vector<std::string>& paths) {
  GlobalEnv globals;
  for (const std::string& path : paths) load_into(globals, path);
  return globals;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    GlobalEnv globals = load_files(inv.files);
    switch (inv.cmd) {
      case Invocation::Cmd::Check: return run_check(inv, globals, out);
      case Invocation::Cmd::Nf: return run_nf(inv, globals, out);
      case Invocation::Cmd::Infer: return run_infer(inv, globals, out);
      case Invocation::Cmd::Conv: return run_conv(inv, globals, out, err);
    }
    return 0;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const TypeError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ttc
