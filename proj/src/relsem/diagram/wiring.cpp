#include "relsem/diagram/wiring.hpp"

#include <algorithm>
#include <map>

#include "relsem/errors.hpp"

namespace relsem {

Wiring Wiring::identity(std::size_t n) {
    Wiring w;
    for (Wire i = 0; i < n; ++i) {
        w.wires.insert(i);
        w.domain.push_back(i);
        w.codomain.push_back(i);
    }
    return w;
}

Wiring Wiring::cup() {
    Wiring w;
    w.wires.insert(0);
    w.domain = {0, 0};
    return w;
}

Wiring Wiring::cap() {
    Wiring w;
    w.wires.insert(0);
    w.codomain = {0, 0};
    return w;
}

void Wiring::check() const {
    auto require = [&](Wire x) {
        if (!wires.count(x))
            throw PreconditionError("wiring references unknown wire " + std::to_string(x));
    };
    for (Wire x : domain) require(x);
    for (Wire x : codomain) require(x);
    for (const auto& b : boxes)
        for (Wire x : b.ports) require(x);
}

static Wiring shifted(const Wiring& w, Wire shift) {
    Wiring out;
    for (Wire x : w.wires) out.wires.insert(x + shift);
    for (const auto& b : w.boxes) {
        WiringBox nb{b.symbol, {}};
        for (Wire x : b.ports) nb.ports.push_back(x + shift);
        out.boxes.push_back(std::move(nb));
    }
    for (Wire x : w.domain) out.domain.push_back(x + shift);
    for (Wire x : w.codomain) out.codomain.push_back(x + shift);
    return out;
}

Wiring tensor(const Wiring& a, const Wiring& b) {
    const Wire shift = a.wires.empty() ? 0 : *a.wires.rbegin() + 1;
    Wiring bs = shifted(b, shift);
    Wiring out = a;
    out.wires.insert(bs.wires.begin(), bs.wires.end());
    out.boxes.insert(out.boxes.end(), bs.boxes.begin(), bs.boxes.end());
    out.domain.insert(out.domain.end(), bs.domain.begin(), bs.domain.end());
    out.codomain.insert(out.codomain.end(), bs.codomain.begin(), bs.codomain.end());
    return out;
}

namespace {

struct WireUnion {
    std::map<Wire, Wire> parent;

    Wire find(Wire x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        Wire root = find(it->second);
        parent[x] = root;
        return root;
    }
    // keep the smallest id as representative
    void unite(Wire a, Wire b) {
        Wire ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (ra < rb) parent[rb] = ra;
        else parent[ra] = rb;
    }
};

Wiring remapped(const Wiring& w, WireUnion& uf) {
    Wiring out;
    for (Wire x : w.wires) out.wires.insert(uf.find(x));
    for (const auto& b : w.boxes) {
        WiringBox nb{b.symbol, {}};
        for (Wire x : b.ports) nb.ports.push_back(uf.find(x));
        out.boxes.push_back(std::move(nb));
    }
    for (Wire x : w.domain) out.domain.push_back(uf.find(x));
    for (Wire x : w.codomain) out.codomain.push_back(uf.find(x));
    return out;
}

}  // namespace

Wiring compose(const Wiring& a, const Wiring& b) {
    if (a.codomain.size() != b.domain.size())
        throw BoundaryMismatchError("compose needs |codomain| = |domain|, got " +
                                    std::to_string(a.codomain.size()) + " and " +
                                    std::to_string(b.domain.size()));
    const Wire shift = a.wires.empty() ? 0 : *a.wires.rbegin() + 1;
    Wiring bs = shifted(b, shift);

    Wiring glued;
    glued.wires = a.wires;
    glued.wires.insert(bs.wires.begin(), bs.wires.end());
    glued.boxes = a.boxes;
    glued.boxes.insert(glued.boxes.end(), bs.boxes.begin(), bs.boxes.end());
    glued.domain = a.domain;
    glued.codomain = bs.codomain;

    WireUnion uf;
    for (std::size_t k = 0; k < a.codomain.size(); ++k) uf.unite(a.codomain[k], bs.domain[k]);
    return remapped(glued, uf);
}

Wiring canonical_wiring(const Wiring& w) {
    Wiring cur = w;
    for (int iter = 0; iter < 8; ++iter) {
        std::map<Wire, Wire> rename;
        Wire next = 0;
        auto visit = [&](Wire x) {
            if (!rename.count(x)) rename[x] = next++;
        };
        for (Wire x : cur.domain) visit(x);
        for (Wire x : cur.codomain) visit(x);
        for (const auto& b : cur.boxes)
            for (Wire x : b.ports) visit(x);
        for (Wire x : cur.wires) visit(x);  // isolated wires last

        Wiring relabelled;
        for (Wire x : cur.wires) relabelled.wires.insert(rename[x]);
        for (const auto& b : cur.boxes) {
            WiringBox nb{b.symbol, {}};
            for (Wire x : b.ports) nb.ports.push_back(rename[x]);
            relabelled.boxes.push_back(std::move(nb));
        }
        for (Wire x : cur.domain) relabelled.domain.push_back(rename[x]);
        for (Wire x : cur.codomain) relabelled.codomain.push_back(rename[x]);
        std::sort(relabelled.boxes.begin(), relabelled.boxes.end());
        if (relabelled == cur) break;
        cur = std::move(relabelled);
    }
    return cur;
}

std::string wiring_key(const Wiring& w) {
    Wiring c = canonical_wiring(w);
    std::string key = "d:";
    for (Wire x : c.domain) key += std::to_string(x) + ",";
    key += ";c:";
    for (Wire x : c.codomain) key += std::to_string(x) + ",";
    key += ";b:";
    for (const auto& b : c.boxes) {
        key += b.symbol + "(";
        for (Wire x : b.ports) key += std::to_string(x) + ",";
        key += ")";
    }
    key += ";w:" + std::to_string(c.wires.size());
    return key;
}

}  // namespace relsem
