#include "relsem/diagram/translate.hpp"

#include <algorithm>
#include <map>

#include "relsem/errors.hpp"

namespace relsem {

Query lambda_translate(const Wiring& d) {
    std::vector<Wire> boundary = d.domain;
    boundary.insert(boundary.end(), d.codomain.begin(), d.codomain.end());

    std::map<Wire, std::string> name;
    std::vector<std::string> free_names, free_vars, vars;
    for (std::size_t p = 0; p < boundary.size(); ++p) {
        std::string positional = "x" + std::to_string(p);
        auto [it, fresh] = name.emplace(boundary[p], positional);
        if (fresh) vars.push_back(positional);
        free_names.push_back(positional);
        free_vars.push_back(it->second);
    }
    std::size_t next = boundary.size();
    for (Wire w : d.wires) {
        if (name.count(w)) continue;
        std::string v = "x" + std::to_string(next++);
        name.emplace(w, v);
        vars.push_back(v);
    }

    std::vector<Atom> atoms;
    for (const auto& b : d.boxes) {
        Atom a{b.symbol, {}};
        for (Wire w : b.ports) a.args.push_back(name.at(w));
        atoms.push_back(std::move(a));
    }
    return Query(std::move(vars), std::move(free_names), std::move(free_vars),
                 std::move(atoms));
}

Wiring theta_translate(const Query& q) {
    Wiring d;
    std::map<std::string, Wire> wire_of;
    for (const auto& v : q.vars()) {
        Wire w = static_cast<Wire>(wire_of.size());
        wire_of.emplace(v, w);
        d.wires.insert(w);
    }
    for (const auto& a : q.atoms()) {
        WiringBox b{a.symbol, {}};
        for (const auto& v : a.args) b.ports.push_back(wire_of.at(v));
        d.boxes.push_back(std::move(b));
    }
    for (const auto& v : q.free_vars()) d.codomain.push_back(wire_of.at(v));
    return d;
}

std::set<Tuple> direct_eval(const Wiring& d, const RelStructure& k) {
    for (const auto& b : d.boxes) {
        auto ar = k.arity(b.symbol);
        if (ar && *ar != b.ports.size())
            throw ArityMismatchError("box " + b.symbol + " has " +
                                     std::to_string(b.ports.size()) +
                                     " ports but the table is " + std::to_string(*ar) +
                                     "-ary");
    }

    using Row = std::map<Wire, std::string>;
    std::vector<Row> rows{Row{}};
    for (const auto& b : d.boxes) {
        std::vector<Row> next;
        for (const auto& row : rows) {
            for (const auto& tup : k.table(b.symbol)) {
                Row extended = row;
                bool ok = true;
                for (std::size_t i = 0; i < b.ports.size() && ok; ++i) {
                    auto [it, fresh] = extended.emplace(b.ports[i], tup[i]);
                    if (!fresh && it->second != tup[i]) ok = false;
                }
                if (ok) next.push_back(std::move(extended));
            }
        }
        rows = std::move(next);
    }
    // wires touched by no box range over the whole universe
    std::vector<Wire> loose;
    for (Wire w : d.wires) {
        bool used = false;
        for (const auto& b : d.boxes)
            used = used || std::find(b.ports.begin(), b.ports.end(), w) != b.ports.end();
        if (!used) loose.push_back(w);
    }
    for (Wire w : loose) {
        std::vector<Row> next;
        for (const auto& row : rows)
            for (const auto& e : k.universe()) {
                Row extended = row;
                extended.emplace(w, e);
                next.push_back(std::move(extended));
            }
        rows = std::move(next);
    }

    std::set<Tuple> out;
    for (const auto& row : rows) {
        Tuple t;
        for (Wire w : d.domain) t.push_back(row.at(w));
        for (Wire w : d.codomain) t.push_back(row.at(w));
        out.insert(std::move(t));
    }
    return out;
}

}  // namespace relsem
