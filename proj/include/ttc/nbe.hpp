#pragma once

#include "ttc/context.hpp"
#include "ttc/syntax.hpp"
#include "ttc/value.hpp"

namespace ttc {

/// Evaluates a well-scoped term. Definitions unfold eagerly; axioms become
/// neutrals (or the irrelevant point when their type has sort 0).
Value eval(const Env& env, const Term& t, const GlobalEnv& globals);

/// Applies a function value at the product type (dom, cod). Lambdas reduce,
/// neutrals grow their spine, the irrelevant point absorbs the application.
Value apply_value(const Value& fn, const Value& arg, const Value& dom, const Closure& cod,
                  const GlobalEnv& globals);

/// Instantiates a closure body with the value of its binder.
Value instantiate(const Closure& cl, const Value& arg, const GlobalEnv& globals);

/// The universe a type value inhabits minimally: sort 0 types are the
/// proof-irrelevant propositions. A product drops to sort 0 whenever its
/// codomain does, no matter how large the domain is.
Level sort_of(const Value& ty, std::uint32_t depth, const GlobalEnv& globals);

/// Embeds a fresh variable of the given type into the semantic domain:
/// the irrelevant point at sort-0 types, otherwise a spine-less neutral.
Value reflect_fresh(const Value& ty, std::uint32_t level, const GlobalEnv& globals);

/// Type-directed readback to an annotated normal form. Values at sort-0
/// types collapse to the constant 0; values at product types eta-expand.
Term quote(std::uint32_t depth, const Value& ty, const Value& v, const GlobalEnv& globals);

/// Readback of a type value as a universe code.
Term quote_type(std::uint32_t depth, const Value& ty, const GlobalEnv& globals);

/// The environment that maps each context slot to itself: fresh variables at
/// relevant types, the irrelevant point at sort-0 types.
Env id_env(const TypingContext& ctx, const GlobalEnv& globals);

/// Normal form of t at type ty, both over ctx: evaluate, then quote back.
Term normalize(const TypingContext& ctx, const Term& t, const Term& ty, const GlobalEnv& globals);

/// Conversion at a type: compares readbacks structurally.
bool convertible(std::uint32_t depth, const Value& ty, const Value& a, const Value& b,
                 const GlobalEnv& globals);

/// Cumulativity: U_i <= U_j for i <= j, products with equal domains are
/// covariant in the codomain, everything else must be convertible.
bool is_subtype(std::uint32_t depth, const Value& a, const Value& b, const GlobalEnv& globals);

}  // namespace ttc
