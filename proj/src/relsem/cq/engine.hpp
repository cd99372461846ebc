#pragma once

#include <map>
#include <set>
#include <string>

#include "relsem/cq/hom.hpp"
#include "relsem/cq/query.hpp"
#include "relsem/cq/structure.hpp"

namespace relsem {

using Assignment = std::map<std::string, std::string>;

/// Canonical structure of a query: universe = its variables, one tuple per
/// atom.
RelStructure canonical_structure(const Query& q);

/// eval(q, k) as the set of homomorphisms CM(q) -> k restricted to the free
/// variables, duplicates collapsed. Deterministic (set ordering).
std::set<Assignment> eval(const Query& q, const RelStructure& k);

/// Rows of eval in free-position order, sorted.
std::set<Tuple> eval_rows(const Query& q, const RelStructure& k);

/// Query containment q1 ⊆ q2, decided as: a homomorphism CM(q2) -> CM(q1)
/// pinning the free variables of q2 positionally onto those of q1.
/// (The classical canonical-database characterisation; the containment
/// property suite pins this direction against the brute-force oracle.)
/// Throws FreeArityMismatchError when the free lists differ in length.
bool contains(const Query& q1, const Query& q2);

}  // namespace relsem
