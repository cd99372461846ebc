#include "relsem/cq/engine.hpp"

#include "relsem/errors.hpp"

namespace relsem {

RelStructure canonical_structure(const Query& q) {
    std::map<std::string, std::set<Tuple>> tables;
    for (const auto& a : q.atoms()) tables[a.symbol].insert(a.args);
    return RelStructure(q.vars(), std::move(tables));
}

static void check_signature(const Query& q, const RelStructure& k) {
    for (const auto& [symbol, ar] : q.arities()) {
        auto ka = k.arity(symbol);
        if (ka && *ka != ar)
            throw SignatureMismatchError("symbol " + symbol + " has arity " +
                                         std::to_string(ar) + " in the query and " +
                                         std::to_string(*ka) + " in the structure");
    }
}

std::set<Assignment> eval(const Query& q, const RelStructure& k) {
    check_signature(q, k);
    std::set<Assignment> out;
    for (const auto& h : enumerate_homomorphisms(canonical_structure(q), k)) {
        Assignment a;
        for (const auto& v : q.free_vars()) a[v] = h.at(v);
        out.insert(std::move(a));
    }
    return out;
}

std::set<Tuple> eval_rows(const Query& q, const RelStructure& k) {
    std::set<Tuple> rows;
    for (const auto& a : eval(q, k)) {
        Tuple row;
        for (const auto& v : q.free_vars()) row.push_back(a.at(v));
        rows.insert(std::move(row));
    }
    return rows;
}

bool contains(const Query& q1, const Query& q2) {
    if (q1.free_arity() != q2.free_arity())
        throw FreeArityMismatchError("containment needs equal free arities, got " +
                                     std::to_string(q1.free_arity()) + " and " +
                                     std::to_string(q2.free_arity()));
    Hom pins;
    for (std::size_t p = 0; p < q2.free_arity(); ++p) {
        const auto& from = q2.free_vars()[p];
        const auto& to = q1.free_vars()[p];
        auto [it, fresh] = pins.emplace(from, to);
        if (!fresh && it->second != to) return false;  // q2 forces equal positions, q1 does not
    }
    return find_homomorphism(canonical_structure(q2), canonical_structure(q1), pins).has_value();
}

}  // namespace relsem
