#pragma once

#include <string>
#include <vector>

namespace relsem {

/// One simple type b^(z). z = 0 is the plain basic type, z-1 its left
/// adjoint, z+1 its right adjoint (so `*b` is z = -1 and `b*` is z = +1).
struct SimpleType {
    std::string basic;
    int z = 0;

    bool operator==(const SimpleType&) const = default;
    auto operator<=>(const SimpleType&) const = default;
};

/// A free-pregroup element as a sequence of simple types; the empty sequence
/// is the monoidal unit.
using PregroupType = std::vector<SimpleType>;

enum class AdjointSide { left, right };

/// Reverses the token order and shifts every exponent down (left) or up
/// (right). adjoint(adjoint(t, left), right) == t.
PregroupType adjoint(const PregroupType& t, AdjointSide side);

/// Surface syntax: whitespace-separated tokens, `*` prefixes for left
/// adjoints and suffixes for right adjoints, e.g. "*i s o*". The empty
/// string denotes the unit. Round-trips bit-exactly through print_type.
PregroupType parse_type(const std::string& text);
std::string print_type(const PregroupType& t);
std::string print_simple(const SimpleType& t);

}  // namespace relsem
