#include "relsem/cq/query.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "relsem/errors.hpp"

namespace relsem {

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) &&
            std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            // compare digit runs numerically: longer run (sans leading zeros) wins
            std::string da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
            da.erase(0, std::min(da.find_first_not_of('0'), da.size() - 1));
            db.erase(0, std::min(db.find_first_not_of('0'), db.size() - 1));
            if (da.size() != db.size()) return da.size() < db.size();
            if (da != db) return da < db;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

Query::Query(std::vector<std::string> vars, std::vector<std::string> free_names,
             std::vector<std::string> free_vars, std::vector<Atom> atoms)
    : vars_(std::move(vars)), free_names_(std::move(free_names)),
      free_vars_(std::move(free_vars)) {
    if (free_names_.size() != free_vars_.size())
        throw PreconditionError("free name/variable lists differ in length");
    std::set<std::string> varset(vars_.begin(), vars_.end());
    if (varset.size() != vars_.size()) throw PreconditionError("duplicate variable");
    for (const auto& v : free_vars_)
        if (!varset.count(v)) throw PreconditionError("free variable not declared: " + v);
    std::set<std::string> nameset(free_names_.begin(), free_names_.end());
    if (nameset.size() != free_names_.size())
        throw PreconditionError("duplicate free position name");
    for (const auto& a : atoms) {
        for (const auto& v : a.args)
            if (!varset.count(v))
                throw PreconditionError("atom argument not declared: " + v);
        if (std::find(atoms_.begin(), atoms_.end(), a) == atoms_.end()) atoms_.push_back(a);
    }
    arities();  // reject symbols used at two arities
}

std::vector<std::string> Query::bound_vars() const {
    std::vector<std::string> out;
    std::set<std::string> free(free_vars_.begin(), free_vars_.end());
    for (const auto& v : vars_)
        if (!free.count(v)) out.push_back(v);
    return out;
}

std::map<std::string, std::size_t> Query::arities() const {
    std::map<std::string, std::size_t> out;
    for (const auto& a : atoms_) {
        auto [it, fresh] = out.emplace(a.symbol, a.args.size());
        if (!fresh && it->second != a.args.size())
            throw SignatureMismatchError("symbol " + a.symbol + " used at arities " +
                                         std::to_string(it->second) + " and " +
                                         std::to_string(a.args.size()));
    }
    return out;
}

Query Query::renamed(const std::map<std::string, std::string>& f) const {
    auto ren = [&](const std::string& v) {
        auto it = f.find(v);
        return it == f.end() ? v : it->second;
    };
    Query out;
    for (const auto& v : vars_) out.vars_.push_back(ren(v));
    for (const auto& v : free_names_) out.free_names_.push_back(ren(v));
    for (const auto& v : free_vars_) out.free_vars_.push_back(ren(v));
    for (const auto& a : atoms_) {
        Atom b{a.symbol, {}};
        for (const auto& v : a.args) b.args.push_back(ren(v));
        out.atoms_.push_back(std::move(b));
    }
    return Query(out.vars_, out.free_names_, out.free_vars_, out.atoms_);
}

// ---------------------------------------------------------------------------
// surface syntax

namespace {

struct Lexer {
    std::string text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw InvalidInputError(std::string("expected '") + c + "' in query at offset " +
                                    std::to_string(pos));
    }
    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    std::string ident() {
        skip_ws();
        if (pos >= text.size() || !ident_start(text[pos]))
            throw InvalidInputError("expected identifier in query at offset " +
                                    std::to_string(pos));
        std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }
    bool peek_ident() {
        skip_ws();
        return pos < text.size() && ident_start(text[pos]);
    }
};

struct UnionFind {
    std::map<std::string, std::string> parent;

    const std::string& find(const std::string& v) {
        auto& p = parent[v];
        if (p.empty()) p = v;
        if (p == v) return parent[v];
        p = find(p);
        return parent[v];
    }
    void unite(const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb) parent[ra] = rb;
    }
};

}  // namespace

Query Query::parse(const std::string& text) {
    Lexer lex{text};
    std::vector<std::string> bound;
    std::vector<std::string> order;  // first-appearance order of all variables
    std::set<std::string> seen;
    auto note = [&](const std::string& v) {
        if (seen.insert(v).second) order.push_back(v);
    };

    // optional quantifier prefix
    {
        std::size_t mark = lex.pos;
        if (lex.peek_ident()) {
            std::string word = lex.ident();
            if (word == "exists") {
                while (lex.peek_ident()) {
                    std::string v = lex.ident();
                    if (std::find(bound.begin(), bound.end(), v) != bound.end())
                        throw InvalidInputError("duplicate bound variable: " + v);
                    bound.push_back(v);
                    note(v);
                }
                if (bound.empty()) throw InvalidInputError("empty quantifier prefix");
                lex.expect('.');
            } else {
                lex.pos = mark;
            }
        }
    }

    std::vector<Atom> atoms;
    std::vector<std::pair<std::string, std::string>> equalities;
    bool first = true;
    while (first || lex.accept('&')) {
        first = false;
        std::string head = lex.ident();
        if (head == "true" && lex.peek() != '(') continue;
        if (lex.accept('(')) {
            Atom a{head, {}};
            if (!lex.accept(')')) {
                do {
                    std::string v = lex.ident();
                    note(v);
                    a.args.push_back(v);
                } while (lex.accept(','));
                lex.expect(')');
            }
            atoms.push_back(std::move(a));
        } else if (lex.accept('=')) {
            std::string rhs = lex.ident();
            note(head);
            note(rhs);
            equalities.emplace_back(head, rhs);
        } else {
            throw InvalidInputError("expected '(' or '=' after " + head + " in query");
        }
    }
    if (!lex.eof()) throw InvalidInputError("trailing input in query at offset " +
                                            std::to_string(lex.pos));

    // merge equated variables; representative is a free name when one side is
    // free, the lexicographically smaller name otherwise
    std::set<std::string> bound_set(bound.begin(), bound.end());
    UnionFind uf;
    for (const auto& [a, b] : equalities) uf.unite(a, b);
    std::map<std::string, std::vector<std::string>> classes;
    for (const auto& v : order) classes[uf.find(v)].push_back(v);
    std::map<std::string, std::string> rep;  // var -> class representative
    for (const auto& [root, members] : classes) {
        std::string best;
        bool best_free = false;
        for (const auto& m : members) {
            bool is_free = !bound_set.count(m);
            if (best.empty() || (is_free && !best_free) ||
                (is_free == best_free && m < best)) {
                best = m;
                best_free = is_free;
            }
        }
        for (const auto& m : members) rep[m] = best;
    }

    std::vector<std::string> free_names;
    for (const auto& v : order)
        if (!bound_set.count(v)) free_names.push_back(v);
    std::sort(free_names.begin(), free_names.end(), natural_less);
    std::vector<std::string> free_vars;
    for (const auto& v : free_names) free_vars.push_back(rep[v]);

    std::vector<std::string> vars;
    std::set<std::string> emitted;
    for (const auto& v : free_vars)
        if (emitted.insert(v).second) vars.push_back(v);
    for (const auto& v : order) {
        const auto& r = rep[v];
        if (emitted.insert(r).second) vars.push_back(r);
    }

    std::vector<Atom> merged;
    for (auto& a : atoms) {
        for (auto& v : a.args) v = rep[v];
        merged.push_back(std::move(a));
    }
    return Query(std::move(vars), std::move(free_names), std::move(free_vars),
                 std::move(merged));
}

std::string Query::to_text() const {
    std::string out;
    auto bound = bound_vars();
    if (!bound.empty()) {
        out += "exists";
        for (const auto& v : bound) out += " " + v;
        out += " . ";
    }
    std::vector<std::string> conjuncts;
    for (const auto& a : atoms_) {
        std::string s = a.symbol + "(";
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i) s += ",";
            s += a.args[i];
        }
        s += ")";
        conjuncts.push_back(std::move(s));
    }
    std::set<std::string> mentioned;
    for (const auto& a : atoms_) mentioned.insert(a.args.begin(), a.args.end());
    for (std::size_t p = 0; p < free_names_.size(); ++p)
        if (free_names_[p] != free_vars_[p]) {
            conjuncts.push_back(free_names_[p] + " = " + free_vars_[p]);
            mentioned.insert(free_vars_[p]);
        }
    // a free variable in no atom is only expressible as a self-equality
    for (std::size_t p = 0; p < free_names_.size(); ++p)
        if (free_names_[p] == free_vars_[p] && !mentioned.count(free_vars_[p]))
            conjuncts.push_back(free_names_[p] + " = " + free_names_[p]);
    if (conjuncts.empty()) {
        out += "true";
    } else {
        for (std::size_t i = 0; i < conjuncts.size(); ++i) {
            if (i) out += " & ";
            out += conjuncts[i];
        }
    }
    return out;
}

}  // namespace relsem
