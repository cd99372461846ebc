#pragma once

// Independent oracles: straight-line brute force with no code shared with the
// implementation paths they check.

#include <set>
#include <utility>
#include <vector>

#include "relsem/cq/engine.hpp"
#include "relsem/cq/query.hpp"
#include "relsem/cq/structure.hpp"
#include "relsem/pregroup/grammar.hpp"
#include "relsem/pregroup/reduce_oracle.hpp"

namespace testsupport {

/// Direct satisfaction semantics: every valuation of all variables into the
/// universe, keep those where every atom's tuple is in its table, project to
/// the free variables.
std::set<relsem::Assignment> satisfaction_eval(const relsem::Query& q,
                                               const relsem::RelStructure& k);
std::set<relsem::Tuple> satisfaction_rows(const relsem::Query& q,
                                          const relsem::RelStructure& k);

/// Every map U(src) -> U(dst) (|dst|^|src| of them) that extends `pins` and
/// preserves all tuples.
std::vector<relsem::Hom> all_maps_homs(const relsem::RelStructure& src,
                                       const relsem::RelStructure& dst,
                                       const relsem::Hom& pins = {});

/// Canonical-database containment oracle: q1 is contained in q2 iff the
/// identity tuple on fv(q1) shows up when evaluating q2 over CM(q1) with the
/// satisfaction-semantics evaluator.
bool containment_oracle(const relsem::Query& q1, const relsem::Query& q2);

/// All (entry assignment, matching) parses found by exhausting dictionary
/// assignments and running the non-crossing reduction oracle on each.
using OracleParse = std::pair<std::vector<std::size_t>, relsem::Matching>;
std::set<OracleParse> oracle_parse_set(const relsem::Grammar& g,
                                       const std::vector<std::string>& words,
                                       const relsem::PregroupType& target);
bool oracle_grammatical(const relsem::Grammar& g, const std::vector<std::string>& words,
                        const relsem::PregroupType& target);

}  // namespace testsupport
