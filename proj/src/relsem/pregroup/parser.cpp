#include "relsem/pregroup/parser.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "relsem/errors.hpp"

namespace relsem {

namespace {

struct IntTok {
    int basic;  // index into the poset
    int z;
};

bool contr(const BasicTypePoset& poset, const IntTok& left, const IntTok& right) {
    if (left.z != right.z + 1) return false;
    return right.z % 2 == 0 ? poset.leq(right.basic, left.basic)
                            : poset.leq(left.basic, right.basic);
}

bool induced(const BasicTypePoset& poset, const IntTok& from, const IntTok& to) {
    if (from.z != to.z) return false;
    return from.z % 2 == 0 ? poset.leq(from.basic, to.basic) : poset.leq(to.basic, from.basic);
}

std::vector<IntTok> intern(const BasicTypePoset& poset, const PregroupType& t) {
    std::vector<IntTok> out;
    out.reserve(t.size());
    for (const auto& tok : t) {
        auto idx = poset.index_of(tok.basic);
        if (!idx) throw InvalidInputError("type uses unknown basic type: " + tok.basic);
        out.push_back({static_cast<int>(*idx), tok.z});
    }
    return out;
}

/// Recognizer over the lattice of entry choices: vertex = word boundary or a
/// position inside one candidate entry of one word. A span between two
/// vertices is nullable when every token along some path cancels internally;
/// entry choices for words strictly inside a span are free. This keeps the
/// search polynomial in the total token count instead of exponential in the
/// number of lexical choices.
class Lattice {
public:
    Lattice(const Grammar& g, const std::vector<std::string>& words,
            const std::vector<std::vector<std::size_t>>& cands, const PregroupType& target)
        : poset_(g.basics()), target_(intern(poset_, target)) {
        const std::size_t w = words.size();
        boundary_.resize(w + 1);
        // boundaries first, then internal vertices per candidate entry
        for (std::size_t i = 0; i <= w; ++i) boundary_[i] = new_vertex();
        eps_.assign(w, false);
        for (std::size_t i = 0; i < w; ++i) {
            for (std::size_t e : cands[i]) {
                const auto toks = intern(poset_, g.dictionary()[e].type);
                if (toks.empty()) {
                    eps_[i] = true;
                    continue;
                }
                int prev = boundary_[i];
                for (std::size_t k = 0; k < toks.size(); ++k) {
                    int next = k + 1 == toks.size() ? boundary_[i + 1] : new_vertex();
                    edges_[prev].push_back({toks[k], next});
                    all_edges_.push_back({prev, toks[k], next});
                    prev = next;
                }
            }
        }
        // forward epsilon closure of each boundary
        closure_end_.assign(w + 1, 0);
        for (std::size_t i = 0; i <= w; ++i) {
            std::size_t j = i;
            while (j < w && eps_[j]) ++j;
            closure_end_[i] = j;
        }
        null_memo_.assign(vertex_count_ * vertex_count_, 0);
        match_memo_.assign(vertex_count_ * (target_.size() + 1), 0);
    }

    bool accepts() { return match(boundary_[0], 0); }

private:
    struct Edge {
        IntTok tok;
        int to;
    };
    struct FullEdge {
        int from;
        IntTok tok;
        int to;
    };

    int new_vertex() {
        edges_.emplace_back();
        return vertex_count_++;
    }

    // vertices reachable from u by skipping words with an empty-type entry
    std::vector<int> closure(int u) const {
        std::vector<int> out{u};
        auto it = std::find(boundary_.begin(), boundary_.end(), u);
        if (it != boundary_.end()) {
            std::size_t i = static_cast<std::size_t>(it - boundary_.begin());
            for (std::size_t j = i + 1; j <= closure_end_[i]; ++j) out.push_back(boundary_[j]);
        }
        return out;
    }

    bool null(int u, int v) {
        char& memo = null_memo_[static_cast<std::size_t>(u) * vertex_count_ + v];
        if (memo) return memo == 1;
        memo = 2;
        for (int u0 : closure(u)) {
            if (u0 == v) {
                memo = 1;
                return true;
            }
        }
        for (int u0 : closure(u)) {
            for (const Edge& first : edges_[u0]) {
                for (const FullEdge& partner : all_edges_) {
                    if (!contr(poset_, first.tok, partner.tok)) continue;
                    if (null(first.to, partner.from) && null(partner.to, v)) {
                        memo = 1;
                        return true;
                    }
                }
            }
        }
        return false;
    }

    bool match(int u, std::size_t r) {
        char& memo = match_memo_[static_cast<std::size_t>(u) * (target_.size() + 1) + r];
        if (memo) return memo == 1;
        memo = 2;
        const int end = boundary_.back();
        for (int u0 : closure(u)) {
            if (u0 == end && r == target_.size()) {
                memo = 1;
                return true;
            }
        }
        for (int u0 : closure(u)) {
            for (const Edge& first : edges_[u0]) {
                if (r < target_.size() && induced(poset_, first.tok, target_[r]) &&
                    match(first.to, r + 1)) {
                    memo = 1;
                    return true;
                }
                for (const FullEdge& partner : all_edges_) {
                    if (!contr(poset_, first.tok, partner.tok)) continue;
                    if (null(first.to, partner.from) && match(partner.to, r)) {
                        memo = 1;
                        return true;
                    }
                }
            }
        }
        return false;
    }

    const BasicTypePoset& poset_;
    std::vector<IntTok> target_;
    int vertex_count_ = 0;
    std::vector<int> boundary_;
    std::vector<bool> eps_;
    std::vector<std::size_t> closure_end_;
    std::vector<std::vector<Edge>> edges_;
    std::vector<FullEdge> all_edges_;
    std::vector<char> null_memo_;   // 0 unknown, 1 yes, 2 no
    std::vector<char> match_memo_;
};

/// Canonical-order matching enumerator for one fixed entry assignment.
/// Decisions are taken at the leftmost unresolved position, cups before
/// output and partners in ascending order, all feasibility-pruned through the
/// span tables, so emission order is lexicographic on the sorted pair list.
class FixedAssignment {
public:
    FixedAssignment(const BasicTypePoset& poset, std::vector<IntTok> toks,
                    std::vector<IntTok> target)
        : poset_(poset), toks_(std::move(toks)), target_(std::move(target)) {
        const std::size_t n = toks_.size();
        const std::size_t m = target_.size();
        null_.assign((n + 1) * (n + 1), false);
        for (std::size_t i = 0; i <= n; ++i) at_null(i, i) = true;
        for (std::size_t len = 2; len <= n; len += 2)
            for (std::size_t i = 0; i + len <= n; ++i) {
                const std::size_t j = i + len;
                for (std::size_t k = i + 1; k < j && !at_null(i, j); ++k)
                    if (contr(poset_, toks_[i], toks_[k]) && at_null(i + 1, k) &&
                        at_null(k + 1, j))
                        at_null(i, j) = true;
            }
        matchable_.assign((n + 1) * (m + 1), false);
        at_match(n, m) = true;
        for (std::size_t ii = n; ii-- > 0;)
            for (std::size_t r = 0; r <= m; ++r) {
                bool ok = false;
                if (r < m && induced(poset_, toks_[ii], target_[r]) && at_match(ii + 1, r + 1))
                    ok = true;
                for (std::size_t j = ii + 1; j < n && !ok; ++j)
                    if (contr(poset_, toks_[ii], toks_[j]) && at_null(ii + 1, j) &&
                        at_match(j + 1, r))
                        ok = true;
                at_match(ii, r) = ok;
            }
    }

    bool feasible() const { return toks_.empty() ? target_.empty() : at_match(0, 0); }

    /// Calls `cb` for each matching in canonical order; `cb` returns false to
    /// stop. Returns false when stopped early.
    bool each_matching(const std::function<bool(const std::vector<std::pair<std::size_t, std::size_t>>&)>& cb) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        return suffix(0, 0, pairs, cb);
    }

private:
    using Cont = std::function<bool()>;

    bool at_null(std::size_t i, std::size_t j) const {
        return null_[i * (toks_.size() + 1) + j];
    }
    std::vector<bool>::reference at_null(std::size_t i, std::size_t j) {
        return null_[i * (toks_.size() + 1) + j];
    }
    bool at_match(std::size_t i, std::size_t r) const {
        return matchable_[i * (target_.size() + 1) + r];
    }
    std::vector<bool>::reference at_match(std::size_t i, std::size_t r) {
        return matchable_[i * (target_.size() + 1) + r];
    }

    bool span(std::size_t a, std::size_t b,
              std::vector<std::pair<std::size_t, std::size_t>>& pairs, const Cont& cont) {
        if (a == b) return cont();
        for (std::size_t j = a + 1; j < b; ++j) {
            if (!contr(poset_, toks_[a], toks_[j]) || !at_null(a + 1, j) || !at_null(j + 1, b))
                continue;
            pairs.emplace_back(a, j);
            bool keep = span(a + 1, j, pairs, [&] { return span(j + 1, b, pairs, cont); });
            pairs.pop_back();
            if (!keep) return false;
        }
        return true;
    }

    bool suffix(std::size_t i, std::size_t r,
                std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                const std::function<bool(const std::vector<std::pair<std::size_t, std::size_t>>&)>& cb) {
        const std::size_t n = toks_.size();
        if (i == n) return r == target_.size() ? cb(pairs) : true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!contr(poset_, toks_[i], toks_[j]) || !at_null(i + 1, j) || !at_match(j + 1, r))
                continue;
            pairs.emplace_back(i, j);
            bool keep = span(i + 1, j, pairs, [&] { return suffix(j + 1, r, pairs, cb); });
            pairs.pop_back();
            if (!keep) return false;
        }
        if (r < target_.size() && induced(poset_, toks_[i], target_[r]) && at_match(i + 1, r + 1))
            return suffix(i + 1, r + 1, pairs, cb);
        return true;
    }

    const BasicTypePoset& poset_;
    std::vector<IntTok> toks_;
    std::vector<IntTok> target_;
    std::vector<bool> null_;
    std::vector<bool> matchable_;
};

struct Problem {
    const Grammar& g;
    const std::vector<std::string>& words;
    const PregroupType& target;
    std::vector<std::vector<std::size_t>> cands;
};

Problem make_problem(const Grammar& g, const std::vector<std::string>& words,
                     const PregroupType& target) {
    Problem p{g, words, target, {}};
    for (const auto& w : words) {
        if (!g.in_vocabulary(w)) throw UnknownWordError("word not in vocabulary: " + w);
        p.cands.push_back(g.entries_for(w));
    }
    (void)intern(g.basics(), target);  // reject unknown basics up front
    return p;
}

ParseDiagram build_diagram(const Problem& p, const std::vector<std::size_t>& assignment,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    ParseDiagram d;
    d.words = p.words;
    d.entry_indices = assignment;
    std::size_t total = 0;
    for (std::size_t e : assignment) {
        d.entry_types.push_back(p.g.dictionary()[e].type);
        total += d.entry_types.back().size();
    }
    d.matching = pairs;
    std::sort(d.matching.begin(), d.matching.end());
    std::vector<bool> cupped(total, false);
    for (const auto& [i, j] : d.matching) cupped[i] = cupped[j] = true;
    for (std::size_t pos = 0; pos < total; ++pos)
        if (!cupped[pos]) d.output.push_back(pos);
    d.target = p.target;
    return d;
}

/// Enumerates assignments in lexicographic entry-index order, pruning
/// prefixes that cannot complete via the lattice recognizer, and within each
/// assignment emits matchings canonically.
bool enum_parses(const Problem& p, std::size_t word_idx, std::vector<std::size_t>& chosen,
                 const std::function<bool(const ParseDiagram&)>& cb) {
    if (word_idx == p.words.size()) {
        std::vector<IntTok> toks;
        for (std::size_t e : chosen) {
            auto t = intern(p.g.basics(), p.g.dictionary()[e].type);
            toks.insert(toks.end(), t.begin(), t.end());
        }
        FixedAssignment fixed(p.g.basics(), std::move(toks), intern(p.g.basics(), p.target));
        if (!fixed.feasible()) return true;
        return fixed.each_matching([&](const auto& pairs) {
            return cb(build_diagram(p, chosen, pairs));
        });
    }
    for (std::size_t e : p.cands[word_idx]) {
        chosen.push_back(e);
        std::vector<std::vector<std::size_t>> restricted;
        for (std::size_t i = 0; i < p.words.size(); ++i)
            restricted.push_back(i < chosen.size() ? std::vector<std::size_t>{chosen[i]}
                                                   : p.cands[i]);
        bool viable = Lattice(p.g, p.words, restricted, p.target).accepts();
        if (viable && !enum_parses(p, word_idx + 1, chosen, cb)) {
            chosen.pop_back();
            return false;
        }
        chosen.pop_back();
    }
    return true;
}

}  // namespace

bool grammatical(const Grammar& g, const std::vector<std::string>& words,
                 const PregroupType& target) {
    Problem p = make_problem(g, words, target);
    return Lattice(g, words, p.cands, target).accepts();
}

std::optional<ParseDiagram> parse(const Grammar& g, const std::vector<std::string>& words,
                                  const PregroupType& target) {
    auto found = enumerate_parses(g, words, target, 1);
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<ParseDiagram> enumerate_parses(const Grammar& g,
                                           const std::vector<std::string>& words,
                                           const PregroupType& target, std::size_t limit) {
    if (limit == 0) throw PreconditionError("enumeration limit must be at least 1");
    Problem p = make_problem(g, words, target);
    std::vector<ParseDiagram> out;
    std::vector<std::size_t> chosen;
    enum_parses(p, 0, chosen, [&](const ParseDiagram& d) {
        out.push_back(d);
        return out.size() < limit;
    });
    return out;
}

std::vector<std::string> tokenize(const std::string& sentence) {
    std::vector<std::string> words;
    std::istringstream in(sentence);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

}  // namespace relsem
