#include "relsem/pregroup/reduce_oracle.hpp"

#include <algorithm>
#include <functional>

#include "relsem/errors.hpp"
#include "relsem/pregroup/grammar.hpp"

namespace relsem {

namespace {

constexpr std::size_t kScaleGuard = 16;

struct Search {
    const PregroupType& toks;
    const PregroupType& tgt;
    const BasicTypePoset& poset;
    Matching pairs;
    std::vector<std::size_t> outs;
    std::set<Matching>* found;

    // Enumerate matchings that cancel every position in `rem`, then resume.
    void cancel_all(const std::vector<std::size_t>& rem, const std::function<void()>& cont) {
        if (rem.empty()) {
            cont();
            return;
        }
        for (std::size_t k = 1; k < rem.size(); ++k) {
            if (!contractible(poset, toks[rem[0]], toks[rem[k]])) continue;
            std::vector<std::size_t> inner(rem.begin() + 1, rem.begin() + k);
            std::vector<std::size_t> rest(rem.begin() + k + 1, rem.end());
            pairs.emplace_back(rem[0], rem[k]);
            cancel_all(inner, [&] { cancel_all(rest, cont); });
            pairs.pop_back();
        }
    }

    void reduce(const std::vector<std::size_t>& rem) {
        if (rem.empty()) {
            if (outs.size() != tgt.size()) return;
            for (std::size_t r = 0; r < outs.size(); ++r)
                if (!induced_leq(poset, toks[outs[r]], tgt[r])) return;
            Matching sorted = pairs;
            std::sort(sorted.begin(), sorted.end());
            found->insert(sorted);
            return;
        }
        // leftmost position survives to the output...
        outs.push_back(rem[0]);
        reduce({rem.begin() + 1, rem.end()});
        outs.pop_back();
        // ...or is cupped with a later one after everything between cancels
        for (std::size_t k = 1; k < rem.size(); ++k) {
            if (!contractible(poset, toks[rem[0]], toks[rem[k]])) continue;
            std::vector<std::size_t> inner(rem.begin() + 1, rem.begin() + k);
            std::vector<std::size_t> rest(rem.begin() + k + 1, rem.end());
            pairs.emplace_back(rem[0], rem[k]);
            cancel_all(inner, [&] { reduce(rest); });
            pairs.pop_back();
        }
    }
};

}  // namespace

std::set<Matching> brute_force_reduce(const PregroupType& t, const PregroupType& s,
                                      const BasicTypePoset& basics) {
    if (t.size() > kScaleGuard)
        throw ScaleError("brute_force_reduce limited to " + std::to_string(kScaleGuard) +
                         " tokens, got " + std::to_string(t.size()));
    for (const auto& tok : t)
        if (!basics.contains(tok.basic))
            throw InvalidInputError("type uses unknown basic type: " + tok.basic);
    for (const auto& tok : s)
        if (!basics.contains(tok.basic))
            throw InvalidInputError("type uses unknown basic type: " + tok.basic);

    std::set<Matching> found;
    std::vector<std::size_t> all(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) all[i] = i;
    Search search{t, s, basics, {}, {}, &found};
    search.reduce(all);
    return found;
}

}  // namespace relsem
