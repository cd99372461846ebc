#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "relsem/pregroup/poset.hpp"
#include "relsem/pregroup/types.hpp"

namespace relsem {

using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

/// Exhaustively enumerates every non-crossing cup matching witnessing
/// t ≤ s (contractions plus induced steps on the surviving tokens). Plain
/// recursive enumeration, deliberately independent of the parser's dynamic
/// programming: this is the test oracle. Guarded to |t| ≤ 16 (ScaleError).
std::set<Matching> brute_force_reduce(const PregroupType& t, const PregroupType& s,
                                      const BasicTypePoset& basics);

}  // namespace relsem
