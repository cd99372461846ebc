#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relsem/cq/structure.hpp"

namespace relsem {

using Hom = std::map<std::string, std::string>;

/// Searches for a structure-preserving map src -> dst extending `pins`.
/// Backtracking over src elements in order of decreasing atom-degree with
/// forward pruning: after each tentative bind, every fully bound src tuple
/// must appear in the corresponding dst table. Throws SignatureMismatchError
/// when the two structures interpret a symbol at different arities.
std::optional<Hom> find_homomorphism(const RelStructure& src, const RelStructure& dst,
                                     const Hom& pins = {});

/// All homomorphisms extending `pins`, in the deterministic order of the
/// backtracking search, at most `limit` of them (limit 0 means unbounded).
std::vector<Hom> enumerate_homomorphisms(const RelStructure& src, const RelStructure& dst,
                                         const Hom& pins = {}, std::size_t limit = 0);

}  // namespace relsem
