#include "relsem/cq/structure.hpp"

#include "relsem/errors.hpp"

namespace relsem {

RelStructure::RelStructure(std::vector<std::string> universe,
                           std::map<std::string, std::set<Tuple>> tables)
    : universe_(std::move(universe)), tables_(std::move(tables)) {
    std::set<std::string> seen;
    for (const auto& e : universe_) {
        if (e.empty()) throw InvalidInputError("empty universe element id");
        if (!seen.insert(e).second) throw InvalidInputError("duplicate universe element: " + e);
    }
    for (const auto& [symbol, rows] : tables_) {
        std::optional<std::size_t> ar;
        for (const auto& row : rows) {
            if (ar && *ar != row.size())
                throw SignatureMismatchError("symbol " + symbol + " has tuples of arities " +
                                             std::to_string(*ar) + " and " +
                                             std::to_string(row.size()));
            ar = row.size();
            for (const auto& e : row)
                if (!seen.count(e))
                    throw InvalidInputError("tuple element not in universe: " + e);
        }
    }
}

bool RelStructure::has_element(const std::string& e) const {
    for (const auto& u : universe_)
        if (u == e) return true;
    return false;
}

const std::set<Tuple>& RelStructure::table(const std::string& symbol) const {
    auto it = tables_.find(symbol);
    return it == tables_.end() ? empty_ : it->second;
}

std::optional<std::size_t> RelStructure::arity(const std::string& symbol) const {
    auto it = tables_.find(symbol);
    if (it == tables_.end() || it->second.empty()) return std::nullopt;
    return it->second.begin()->size();
}

}  // namespace relsem
