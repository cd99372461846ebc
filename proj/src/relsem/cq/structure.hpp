#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace relsem {

using Tuple = std::vector<std::string>;

/// A finite relational structure: ordered universe plus a table of tuples per
/// symbol. Symbols absent from the table map are read as empty relations; a
/// symbol interpreted at two different arities is a signature mismatch.
class RelStructure {
public:
    RelStructure() = default;
    RelStructure(std::vector<std::string> universe,
                 std::map<std::string, std::set<Tuple>> tables);

    const std::vector<std::string>& universe() const { return universe_; }
    const std::map<std::string, std::set<Tuple>>& tables() const { return tables_; }

    bool has_element(const std::string& e) const;
    const std::set<Tuple>& table(const std::string& symbol) const;
    std::optional<std::size_t> arity(const std::string& symbol) const;

    bool operator==(const RelStructure&) const = default;

private:
    std::vector<std::string> universe_;
    std::map<std::string, std::set<Tuple>> tables_;
    std::set<Tuple> empty_;
};

}  // namespace relsem
