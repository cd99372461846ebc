#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace relsem {

using Wire = std::uint32_t;

struct WiringBox {
    std::string symbol;
    std::vector<Wire> ports;

    bool operator==(const WiringBox&) const = default;
    auto operator<=>(const WiringBox&) const = default;
};

/// A hypergraph arrow: boxes whose ports reference wires, plus ordered
/// boundary wire lists. Wires shared between several ports (or repeated on a
/// boundary) are the spiders: a wire is one variable. A wiring with isolated
/// wires is distinct from the empty wiring -- isolated non-boundary wires are
/// existentially quantified unconstrained variables.
struct Wiring {
    std::set<Wire> wires;
    std::vector<WiringBox> boxes;
    std::vector<Wire> domain;
    std::vector<Wire> codomain;

    bool operator==(const Wiring&) const = default;

    static Wiring identity(std::size_t n);
    /// cup: arrow 2 -> 0 with both domain legs on one wire
    static Wiring cup();
    /// cap: arrow 0 -> 2 with both codomain legs on one wire
    static Wiring cap();

    void check() const;  // all boundary/port references exist
};

/// Disjoint union; boundaries concatenate.
Wiring tensor(const Wiring& a, const Wiring& b);

/// Glues codomain(a)[k] to domain(b)[k] by union-find wire merging; the
/// canonical representative of a merged class is its smallest wire id.
/// Throws BoundaryMismatchError unless |codomain(a)| == |domain(b)|.
Wiring compose(const Wiring& a, const Wiring& b);

/// Cheap canonical form for isomorphism testing: wires relabelled by first
/// appearance on the boundaries then in the box list, boxes sorted by
/// (symbol, ports), iterated to a fixpoint; isolated wires renumbered last.
/// Equal keys imply isomorphic wirings; the converse is checked semantically
/// (mutual containment) where it matters.
Wiring canonical_wiring(const Wiring& w);
std::string wiring_key(const Wiring& w);

}  // namespace relsem
