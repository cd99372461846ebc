#pragma once

#include <set>

#include "relsem/cq/query.hpp"
#include "relsem/cq/structure.hpp"
#include "relsem/diagram/wiring.hpp"

namespace relsem {

/// Wiring -> conjunctive query: one variable per wire, one atom per box. Free
/// variables are named x0..x_{m+n-1} in boundary order (domain then
/// codomain); repeated boundary wires make later positions aliases of the
/// first occurrence. Bound variables continue the numbering in wire-id
/// order.
Query lambda_translate(const Wiring& d);

/// Conjunctive query -> wiring: one wire per variable, one box per atom,
/// codomain = the free positions, empty domain. lambda_translate of the
/// result is equivalent to the input up to mutual containment.
Wiring theta_translate(const Query& q);

/// Evaluates a wiring directly against tables: natural join of the box
/// tables on shared wires, unconstrained wires ranging over the universe,
/// projected onto domain then codomain in order. Agrees with
/// eval(lambda_translate(d), k) in boundary order. Throws
/// ArityMismatchError when a box's table has the wrong width.
std::set<Tuple> direct_eval(const Wiring& d, const RelStructure& k);

}  // namespace relsem
