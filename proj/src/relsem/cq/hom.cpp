#include "relsem/cq/hom.hpp"

#include <algorithm>
#include <functional>

#include "relsem/errors.hpp"

namespace relsem {

namespace {

struct SrcTuple {
    const std::set<Tuple>* dst_table;
    std::vector<std::size_t> elems;  // src element indices
};

struct Searcher {
    const RelStructure& src;
    const RelStructure& dst;
    std::vector<std::size_t> order;               // src element indices, search order
    std::vector<std::size_t> rank;                // element index -> position in order
    std::vector<SrcTuple> tuples;
    std::vector<std::vector<std::size_t>> by_elem;  // element -> tuples touching it
    std::vector<int> bound;                       // element -> dst index or -1

    Searcher(const RelStructure& s, const RelStructure& d, const Hom& pins) : src(s), dst(d) {
        const auto& u = src.universe();
        std::map<std::string, std::size_t> idx;
        for (std::size_t i = 0; i < u.size(); ++i) idx[u[i]] = i;

        std::vector<std::size_t> degree(u.size(), 0);
        by_elem.resize(u.size());
        for (const auto& [symbol, rows] : src.tables()) {
            auto dst_arity = dst.arity(symbol);
            auto src_arity = src.arity(symbol);
            if (src_arity && dst_arity && *src_arity != *dst_arity)
                throw SignatureMismatchError("symbol " + symbol + " has arity " +
                                             std::to_string(*src_arity) + " in the source and " +
                                             std::to_string(*dst_arity) + " in the target");
            for (const auto& row : rows) {
                SrcTuple t{&dst.table(symbol), {}};
                for (const auto& e : row) {
                    t.elems.push_back(idx.at(e));
                    ++degree[idx.at(e)];
                }
                for (std::size_t e : t.elems) by_elem[e].push_back(tuples.size());
                tuples.push_back(std::move(t));
            }
        }
        for (auto& lst : by_elem) {
            std::sort(lst.begin(), lst.end());
            lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        }

        order.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
        rank.resize(u.size());
        for (std::size_t p = 0; p < order.size(); ++p) rank[order[p]] = p;

        bound.assign(u.size(), -1);
        for (const auto& [from, to] : pins) {
            auto it = idx.find(from);
            if (it == idx.end())
                throw PreconditionError("pinned element not in source universe: " + from);
            int target = -1;
            for (std::size_t j = 0; j < dst.universe().size(); ++j)
                if (dst.universe()[j] == to) target = static_cast<int>(j);
            if (target < 0)
                throw PreconditionError("pinned image not in target universe: " + to);
            if (bound[it->second] >= 0 && bound[it->second] != target)
                throw PreconditionError("conflicting pins for element " + from);
            bound[it->second] = target;
        }
    }

    bool consistent_around(std::size_t elem) const {
        for (std::size_t ti : by_elem[elem]) {
            const auto& t = tuples[ti];
            Tuple image;
            image.reserve(t.elems.size());
            bool complete = true;
            for (std::size_t e : t.elems) {
                if (bound[e] < 0) {
                    complete = false;
                    break;
                }
                image.push_back(dst.universe()[static_cast<std::size_t>(bound[e])]);
            }
            if (complete && !t.dst_table->count(image)) return false;
        }
        return true;
    }

    // returns false when the sink asked to stop
    bool search(std::size_t pos, const std::function<bool(const std::vector<int>&)>& sink) {
        while (pos < order.size() && bound[order[pos]] >= 0) {
            // pinned elements still need their tuples checked once
            if (!consistent_around(order[pos])) return true;
            ++pos;
        }
        if (pos == order.size()) return sink(bound);
        const std::size_t elem = order[pos];
        for (std::size_t j = 0; j < dst.universe().size(); ++j) {
            bound[elem] = static_cast<int>(j);
            if (consistent_around(elem) && !search(pos + 1, sink)) {
                bound[elem] = -1;
                return false;
            }
            bound[elem] = -1;
        }
        return true;
    }

    Hom to_hom(const std::vector<int>& b) const {
        Hom h;
        for (std::size_t i = 0; i < b.size(); ++i)
            h[src.universe()[i]] = dst.universe()[static_cast<std::size_t>(b[i])];
        return h;
    }
};

}  // namespace

std::optional<Hom> find_homomorphism(const RelStructure& src, const RelStructure& dst,
                                     const Hom& pins) {
    auto all = enumerate_homomorphisms(src, dst, pins, 1);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<Hom> enumerate_homomorphisms(const RelStructure& src, const RelStructure& dst,
                                         const Hom& pins, std::size_t limit) {
    Searcher s(src, dst, pins);
    std::vector<Hom> out;
    s.search(0, [&](const std::vector<int>& b) {
        out.push_back(s.to_hom(b));
        return limit == 0 || out.size() < limit;
    });
    return out;
}

}  // namespace relsem
