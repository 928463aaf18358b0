#pragma once

#include <stdexcept>
#include <string>

#include "ttc/context.hpp"
#include "ttc/nbe.hpp"
#include "ttc/parser.hpp"

namespace ttc {

struct TypeError : std::runtime_error {
  TypeError(std::string msg, Span span) : std::runtime_error(std::move(msg)), span(span) {}
  Span span;
};

struct ElabResult {
  Term core;
  Value type;
};

/// Infers a type for a surface term and elaborates it to annotated core.
/// Lambdas are inferable only as the head of an application (a redex);
/// anywhere else they must be checked against an expected product type.
/// `env` must be id_env(ctx).
ElabResult infer(const TypingContext& ctx, const Env& env, const RawTerm& raw,
                 const GlobalEnv& globals);

/// Checks a surface term against an expected type value and elaborates it.
Term check(const TypingContext& ctx, const Env& env, const RawTerm& raw, const Value& expected,
           const GlobalEnv& globals);

/// Checks one declaration and appends it to the global environment.
void check_decl(GlobalEnv& globals, const RawDecl& decl);

/// Re-derives the type of an already elaborated core term. Used to audit
/// elaboration and normalization output; failures indicate kernel bugs.
Value infer_core(const TypingContext& ctx, const Env& env, const Term& t,
                 const GlobalEnv& globals);

/// Checks a core term against an expected type value; throws TypeError on
/// mismatch. The constant 0 checks against exactly the sort-0 types.
void check_core(const TypingContext& ctx, const Env& env, const Term& t, const Value& expected,
                const GlobalEnv& globals);

}  // namespace ttc
