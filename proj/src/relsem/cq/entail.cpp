#include "relsem/cq/entail.hpp"

#include "relsem/errors.hpp"
#include "relsem/pregroup/types.hpp"

namespace relsem {

bool entails(const ParseDiagram& r, const ParseDiagram& r_prime, const Lexicon& lex) {
    if (r.target != r_prime.target)
        throw PreconditionError("entailment needs parses of the same target type, got " +
                                print_type(r.target) + " and " + print_type(r_prime.target));
    Query q = lambda_translate(apply_L(lex, r));
    Query q_prime = lambda_translate(apply_L(lex, r_prime));
    return contains(q, q_prime);
}

}  // namespace relsem
