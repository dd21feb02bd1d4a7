#pragma once

#include <optional>

#include "trs/rewrite.hpp"
#include "trs/term.hpp"

namespace trs {

/// Most general unifier of t and u, fully applied and idempotent; nullopt
/// when the terms do not unify (occurs-check included).
std::optional<Substitution> unify(const Term& t, const Term& u);

/// Linearized cap: every defined-headed subterm and every variable of t is
/// replaced by a fresh variable, numbered next_fresh, next_fresh+1, ... in
/// pre-order. The result is linear and all its variables are >= next_fresh.
Term ren_cap(const Trs& R, int next_fresh, const Term& t);

/// Whether an instance of u could rewrite internally to an instance of v:
/// decided by unifying ren_cap(u), renamed apart from v, with v.
bool connectable(const Trs& R, const Term& u, const Term& v);

/// Root-symbol edge approximation: rhs(r1) and lhs(r2) have equal roots.
/// A variable on either side counts as an edge.
bool hde_edge(const Rule& r1, const Rule& r2);

/// Unification-based edge approximation over the modulo rules R.
bool dpg_unif_edge(const Trs& R, const Rule& r1, const Rule& r2);

} // namespace trs
