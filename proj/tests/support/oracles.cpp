#include "support/oracles.hpp"

#include <map>
#include <string>

namespace testsupport {

using namespace relsem;

std::set<Assignment> satisfaction_eval(const Query& q, const RelStructure& k) {
    const auto& vars = q.vars();
    const auto& u = k.universe();
    std::set<Assignment> out;
    if (vars.empty()) {
        bool sat = true;
        for (const auto& a : q.atoms()) sat = sat && k.table(a.symbol).count(a.args);
        if (sat) out.insert(Assignment{});
        return out;
    }
    if (u.empty()) return out;

    std::vector<std::size_t> choice(vars.size(), 0);
    while (true) {
        std::map<std::string, std::string> v;
        for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = u[choice[i]];
        bool sat = true;
        for (const auto& a : q.atoms()) {
            Tuple t;
            for (const auto& arg : a.args) t.push_back(v.at(arg));
            if (!k.table(a.symbol).count(t)) {
                sat = false;
                break;
            }
        }
        if (sat) {
            Assignment restricted;
            for (const auto& fv : q.free_vars()) restricted[fv] = v.at(fv);
            out.insert(std::move(restricted));
        }
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < u.size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    return out;
}

std::set<Tuple> satisfaction_rows(const Query& q, const RelStructure& k) {
    std::set<Tuple> rows;
    for (const auto& a : satisfaction_eval(q, k)) {
        Tuple row;
        for (const auto& fv : q.free_vars()) row.push_back(a.at(fv));
        rows.insert(std::move(row));
    }
    return rows;
}

std::vector<Hom> all_maps_homs(const RelStructure& src, const RelStructure& dst,
                               const Hom& pins) {
    const auto& us = src.universe();
    const auto& ut = dst.universe();
    std::vector<Hom> out;
    if (us.empty()) {
        if (!pins.empty()) return {};  // pins over an empty universe cannot hold
        out.push_back(Hom{});
        return out;
    }
    if (ut.empty()) return out;

    std::vector<std::size_t> choice(us.size(), 0);
    while (true) {
        Hom h;
        for (std::size_t i = 0; i < us.size(); ++i) h[us[i]] = ut[choice[i]];
        bool ok = true;
        for (const auto& [from, to] : pins)
            if (!h.count(from) || h.at(from) != to) ok = false;
        for (const auto& [symbol, rows] : src.tables()) {
            for (const auto& row : rows) {
                Tuple image;
                for (const auto& e : row) image.push_back(h.at(e));
                if (!dst.table(symbol).count(image)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) out.push_back(std::move(h));
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < ut.size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    return out;
}

bool containment_oracle(const Query& q1, const Query& q2) {
    RelStructure canonical = canonical_structure(q1);
    Tuple identity;
    for (const auto& fv : q1.free_vars()) identity.push_back(fv);
    return satisfaction_rows(q2, canonical).count(identity) > 0;
}

static void assignments_rec(const Grammar& g, const std::vector<std::string>& words,
                            std::size_t i, std::vector<std::size_t>& chosen,
                            const PregroupType& target, std::set<OracleParse>* out) {
    if (i == words.size()) {
        PregroupType concat;
        for (std::size_t e : chosen) {
            const auto& t = g.dictionary()[e].type;
            concat.insert(concat.end(), t.begin(), t.end());
        }
        for (const auto& m : brute_force_reduce(concat, target, g.basics()))
            out->insert({chosen, m});
        return;
    }
    for (std::size_t e : g.entries_for(words[i])) {
        chosen.push_back(e);
        assignments_rec(g, words, i + 1, chosen, target, out);
        chosen.pop_back();
    }
}

std::set<OracleParse> oracle_parse_set(const Grammar& g, const std::vector<std::string>& words,
                                       const PregroupType& target) {
    std::set<OracleParse> out;
    std::vector<std::size_t> chosen;
    assignments_rec(g, words, 0, chosen, target, &out);
    return out;
}

bool oracle_grammatical(const Grammar& g, const std::vector<std::string>& words,
                        const PregroupType& target) {
    return !oracle_parse_set(g, words, target).empty();
}

}  // namespace testsupport
