#include "relsem/diagram/lexicon.hpp"

#include <algorithm>

#include "relsem/errors.hpp"

namespace relsem {

Lexicon::Lexicon(std::map<std::string, std::size_t> basic_arity,
                 std::vector<LexiconEntry> entries)
    : basic_arity_(std::move(basic_arity)), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        for (std::size_t j = 0; j < i; ++j)
            if (entries_[j].word == e.word && entries_[j].type == e.type)
                throw InvalidInputError("duplicate lexicon entry for (" + e.word + ", " +
                                        print_type(e.type) + ")");
        if (e.tmpl.codomain.size() != type_wires(e.type))
            throw InvalidInputError("template codomain for (" + e.word + ", " +
                                    print_type(e.type) + ") has " +
                                    std::to_string(e.tmpl.codomain.size()) +
                                    " wires, the type carries " +
                                    std::to_string(type_wires(e.type)));
        auto in_range = [&](Wire w) { return w < e.tmpl.wire_count; };
        if (!std::all_of(e.tmpl.codomain.begin(), e.tmpl.codomain.end(), in_range))
            throw InvalidInputError("template codomain references unknown wire");
        for (const auto& b : e.tmpl.boxes) {
            if (!std::all_of(b.ports.begin(), b.ports.end(), in_range))
                throw InvalidInputError("template box references unknown wire");
            auto [it, fresh] = symbol_arity_.emplace(b.symbol, b.ports.size());
            if (!fresh && it->second != b.ports.size())
                throw SignatureMismatchError("symbol " + b.symbol + " used at arities " +
                                             std::to_string(it->second) + " and " +
                                             std::to_string(b.ports.size()));
        }
    }
}

std::size_t Lexicon::basic_arity(const std::string& basic) const {
    auto it = basic_arity_.find(basic);
    return it == basic_arity_.end() ? 1 : it->second;
}

std::size_t Lexicon::type_wires(const PregroupType& t) const {
    std::size_t n = 0;
    for (const auto& tok : t) n += basic_arity(tok.basic);
    return n;
}

const LexiconEntry* Lexicon::find(const std::string& word, const PregroupType& type) const {
    for (const auto& e : entries_)
        if (e.word == word && e.type == type) return &e;
    return nullptr;
}

WiringTemplate Lexicon::symbol_template(const std::string& symbol, std::size_t wires) {
    WiringTemplate t;
    t.wire_count = wires;
    WiringBox box{symbol, {}};
    for (Wire w = 0; w < wires; ++w) {
        box.ports.push_back(w);
        t.codomain.push_back(w);
    }
    t.boxes.push_back(std::move(box));
    return t;
}

namespace {

struct BundleMerge {
    std::map<Wire, Wire> parent;

    Wire find(Wire x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        Wire root = find(it->second);
        parent[x] = root;
        return root;
    }
    void unite(Wire a, Wire b) {
        Wire ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (ra < rb) parent[rb] = ra;
        else parent[ra] = rb;
    }
};

}  // namespace

Wiring apply_L(const Lexicon& lex, const ParseDiagram& r) {
    Wiring out;
    std::vector<std::vector<Wire>> bundle;  // per token position
    Wire next = 0;
    for (std::size_t w = 0; w < r.words.size(); ++w) {
        const LexiconEntry* e = lex.find(r.words[w], r.entry_types[w]);
        if (!e)
            throw MissingEntryError("lexicon has no template for (" + r.words[w] + ", " +
                                    print_type(r.entry_types[w]) + ")");
        const Wire base = next;
        for (Wire x = 0; x < e->tmpl.wire_count; ++x) out.wires.insert(base + x);
        next += static_cast<Wire>(e->tmpl.wire_count);
        for (const auto& b : e->tmpl.boxes) {
            WiringBox nb{b.symbol, {}};
            for (Wire x : b.ports) nb.ports.push_back(base + x);
            out.boxes.push_back(std::move(nb));
        }
        std::size_t offset = 0;
        for (const auto& tok : e->type) {
            std::vector<Wire> slice;
            for (std::size_t k = 0; k < lex.basic_arity(tok.basic); ++k)
                slice.push_back(base + e->tmpl.codomain[offset + k]);
            offset += lex.basic_arity(tok.basic);
            bundle.push_back(std::move(slice));
        }
    }

    BundleMerge uf;
    for (const auto& [i, j] : r.matching) {
        const auto& left = bundle[i];
        const auto& right = bundle[j];
        if (left.size() != right.size())
            throw ArityMismatchError("cup (" + std::to_string(i) + ", " + std::to_string(j) +
                                     ") joins bundles of widths " +
                                     std::to_string(left.size()) + " and " +
                                     std::to_string(right.size()));
        // string-diagram bending reverses port order on the adjoint side
        for (std::size_t k = 0; k < left.size(); ++k)
            uf.unite(left[left.size() - 1 - k], right[k]);
    }

    Wiring merged;
    for (Wire x : out.wires) merged.wires.insert(uf.find(x));
    for (const auto& b : out.boxes) {
        WiringBox nb{b.symbol, {}};
        for (Wire x : b.ports) nb.ports.push_back(uf.find(x));
        merged.boxes.push_back(std::move(nb));
    }
    for (std::size_t p : r.output)
        for (Wire x : bundle[p]) merged.codomain.push_back(uf.find(x));
    return merged;
}

}  // namespace relsem
