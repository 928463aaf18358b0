#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ttc/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ttc - type checker with cumulative universes, an impredicative "
               "proof-irrelevant Prop, and normalization-based conversion"};
  app.require_subcommand(1);

  ttc::Invocation inv;

  auto* check = app.add_subcommand("check", "type check declaration files");
  check->add_option("files", inv.files, "input .tt files, loaded in order")
      ->required()
      ->expected(-1);
  check->add_flag("-q,--quiet", inv.quiet, "suppress the success message");

  auto* nf = app.add_subcommand("nf", "print the normal form of an expression");
  nf->add_option("-f,--file", inv.files, "declaration files giving the global scope");
  nf->add_option("-e,--expr", inv.exprs, "expression to normalize")->required()->expected(1);
  nf->add_flag("-a,--annotated", inv.annotated, "print the fully annotated prefix form");

  auto* conv = app.add_subcommand("conv", "decide conversion of two expressions");
  conv->add_option("-f,--file", inv.files, "declaration files giving the global scope");
  conv->add_option("-e,--expr", inv.exprs, "the two expressions to compare")
      ->required()
      ->expected(2);

  auto* infer = app.add_subcommand("infer", "print the inferred type of an expression");
  infer->add_option("-f,--file", inv.files, "declaration files giving the global scope");
  infer->add_option("-e,--expr", inv.exprs, "expression to type")->required()->expected(1);
  infer->add_flag("-a,--annotated", inv.annotated, "print the fully annotated prefix form");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) inv.cmd = ttc::Invocation::Cmd::Check;
  if (nf->parsed()) inv.cmd = ttc::Invocation::Cmd::Nf;
  if (conv->parsed()) inv.cmd = ttc::Invocation::Cmd::Conv;
  if (infer->parsed()) inv.cmd = ttc::Invocation::Cmd::Infer;

  return ttc::run(inv, std::cout, std::cerr);
}
