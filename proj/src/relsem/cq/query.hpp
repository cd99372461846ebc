#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace relsem {

struct Atom {
    std::string symbol;
    std::vector<std::string> args;

    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
};

/// A conjunctive query in prenex normal form: variables, an ordered free
/// list and a conjunction of relational atoms. Equality atoms are eliminated
/// at construction by merging variables; when two distinct free variables are
/// equated, both positions stay in the free list and map to one
/// representative, which is why the free list is a list of (display name,
/// representative) pairs rather than a plain subsequence of the variables.
class Query {
public:
    /// The query ⊤.
    Query() = default;

    /// `vars` are the representative variables (free ones first); the two
    /// free vectors are positional and equally long. Duplicate atoms are
    /// collapsed, first occurrence order is kept.
    Query(std::vector<std::string> vars, std::vector<std::string> free_names,
          std::vector<std::string> free_vars, std::vector<Atom> atoms);

    /// Parses the surface syntax, e.g.
    ///   `exists x1 x2 . infl(x0,x1) & phil(x1) & disc(x1,x2) & calc(x2)`
    /// `true` is ⊤ and equality conjuncts `x = y` compile to variable merges.
    /// Free variables are ordered by name (numeric-aware), which matches the
    /// positional x0..xn naming of diagram translation.
    static Query parse(const std::string& text);

    std::string to_text() const;

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<std::string>& free_names() const { return free_names_; }
    const std::vector<std::string>& free_vars() const { return free_vars_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    std::size_t free_arity() const { return free_vars_.size(); }
    std::vector<std::string> bound_vars() const;

    /// Inferred signature; throws SignatureMismatchError when a symbol is
    /// used at two arities.
    std::map<std::string, std::size_t> arities() const;

    /// Same query with every variable renamed through `f` (must be injective
    /// on vars()).
    Query renamed(const std::map<std::string, std::string>& f) const;

    bool operator==(const Query&) const = default;

private:
    std::vector<std::string> vars_;
    std::vector<std::string> free_names_;
    std::vector<std::string> free_vars_;
    std::vector<Atom> atoms_;
};

/// Numeric-aware name comparison: x2 < x10, plain lexicographic otherwise.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace relsem
