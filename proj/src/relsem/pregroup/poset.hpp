#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relsem {

/// Finite poset of basic types. The order is stored as a closed
/// (reflexive-transitive) boolean matrix over name indices; the generating
/// pairs are kept verbatim so files round-trip.
class BasicTypePoset {
public:
    BasicTypePoset() = default;

    /// Builds the reflexive-transitive closure of `pairs` over `names`.
    /// Throws CycleError if the closure would identify two distinct names and
    /// InvalidInputError on duplicate/unknown names.
    static BasicTypePoset closure(const std::vector<std::string>& names,
                                  const std::vector<std::pair<std::string, std::string>>& pairs);

    /// Discrete poset (only a ≤ a) over the same names.
    BasicTypePoset discrete() const;

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::pair<std::string, std::string>>& generating_pairs() const {
        return pairs_;
    }

    bool contains(const std::string& name) const { return index_of(name).has_value(); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool leq(std::size_t a, std::size_t b) const { return leq_[a * names_.size() + b]; }
    bool leq(const std::string& a, const std::string& b) const;

    bool operator==(const BasicTypePoset& other) const {
        return names_ == other.names_ && leq_ == other.leq_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::pair<std::string, std::string>> pairs_;  // as given
    std::vector<char> leq_;                                   // closed matrix, row-major
};

}  // namespace relsem
