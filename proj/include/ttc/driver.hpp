#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ttc/context.hpp"

namespace ttc {

/// Parsed command line. nf and infer take exactly one expression, conv
/// exactly two, check at least one file.
struct Invocation {
  enum class Cmd { Check, Nf, Conv, Infer };
  Cmd cmd = Cmd::Check;
  std::vector<std::string> files;
  std::vector<std::string> exprs;
  bool annotated = false;
  bool quiet = false;
};

/// Exit codes: 0 success or `equal`, 1 type error, 2 parse error,
/// 3 conv arguments at incompatible types, 4 `not-equal`.
int run(const Invocation& invocation, std::ostream& out, std::ostream& err);

/// Parses and checks the given files, in order, into one environment.
/// Throws ParseError/TypeError with messages already carrying file positions.
GlobalEnv load_files(const std::vector<std::string>& paths);

}  // namespace ttc
