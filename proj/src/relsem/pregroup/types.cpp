#include "relsem/pregroup/types.hpp"

#include <algorithm>
#include <sstream>

#include "relsem/errors.hpp"

namespace relsem {

PregroupType adjoint(const PregroupType& t, AdjointSide side) {
    PregroupType out(t.rbegin(), t.rend());
    const int shift = side == AdjointSide::left ? -1 : +1;
    for (auto& tok : out) tok.z += shift;
    return out;
}

static SimpleType parse_simple(const std::string& tok) {
    std::size_t lead = 0;
    while (lead < tok.size() && tok[lead] == '*') ++lead;
    std::size_t trail = 0;
    while (trail < tok.size() - lead && tok[tok.size() - 1 - trail] == '*') ++trail;
    if (lead > 0 && trail > 0)
        throw InvalidInputError("type token mixes left and right adjoint markers: " + tok);
    std::string basic = tok.substr(lead, tok.size() - lead - trail);
    if (basic.empty() || basic.find('*') != std::string::npos)
        throw InvalidInputError("malformed type token: " + tok);
    return SimpleType{basic, trail > 0 ? static_cast<int>(trail) : -static_cast<int>(lead)};
}

PregroupType parse_type(const std::string& text) {
    PregroupType out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(parse_simple(tok));
    return out;
}

std::string print_simple(const SimpleType& t) {
    std::string s;
    if (t.z < 0) s.append(static_cast<std::size_t>(-t.z), '*');
    s += t.basic;
    if (t.z > 0) s.append(static_cast<std::size_t>(t.z), '*');
    return s;
}

std::string print_type(const PregroupType& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ' ';
        s += print_simple(t[i]);
    }
    return s;
}

}  // namespace relsem
