#include "relsem/pregroup/poset.hpp"

#include <set>

#include "relsem/errors.hpp"

namespace relsem {

BasicTypePoset BasicTypePoset::closure(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    BasicTypePoset p;
    p.names_ = names;
    p.pairs_ = pairs;

    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw InvalidInputError("empty basic type name");
        if (!seen.insert(n).second) throw InvalidInputError("duplicate basic type name: " + n);
    }

    const std::size_t n = names.size();
    p.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
    for (const auto& [a, b] : pairs) {
        auto ia = p.index_of(a);
        auto ib = p.index_of(b);
        if (!ia || !ib)
            throw InvalidInputError("order pair mentions unknown basic type: (" + a + ", " + b +
                                    ")");
        p.leq_[*ia * n + *ib] = 1;
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.leq_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.leq_[i * n + j] && p.leq_[j * n + i])
                throw CycleError("order cycle would identify basic types " + names[i] + " and " +
                                 names[j]);
    return p;
}

BasicTypePoset BasicTypePoset::discrete() const {
    return closure(names_, {});
}

std::optional<std::size_t> BasicTypePoset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool BasicTypePoset::leq(const std::string& a, const std::string& b) const {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib) throw InvalidInputError("basic type not in poset: " + (ia ? b : a));
    return leq(*ia, *ib);
}

}  // namespace relsem
