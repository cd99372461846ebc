#pragma once

#include <stdexcept>
#include <string>

namespace relsem {

// Stable error codes, mirrored one-to-one in the C API header.
enum class ErrorCode {
    invalid_input = 10,   // malformed JSON / surface syntax / bad references
    cycle = 11,           // poset closure would identify two distinct names
    unknown_word = 12,    // utterance token not in the vocabulary
    scale = 13,           // oracle scale guard exceeded
    boundary_mismatch = 14,
    missing_entry = 15,   // lexicon has no template for a dictionary entry
    arity_mismatch = 16,
    signature_mismatch = 17,
    free_arity_mismatch = 18,
    non_closed_sentence = 19,
    unknown_entity = 20,
    precondition = 21,
    internal = 99,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

#define RELSEM_DEFINE_ERROR(Name, code)                                            \
    struct Name : Error {                                                          \
        explicit Name(const std::string& msg) : Error(ErrorCode::code, msg) {}     \
    }

RELSEM_DEFINE_ERROR(InvalidInputError, invalid_input);
RELSEM_DEFINE_ERROR(CycleError, cycle);
RELSEM_DEFINE_ERROR(UnknownWordError, unknown_word);
RELSEM_DEFINE_ERROR(ScaleError, scale);
RELSEM_DEFINE_ERROR(BoundaryMismatchError, boundary_mismatch);
RELSEM_DEFINE_ERROR(MissingEntryError, missing_entry);
RELSEM_DEFINE_ERROR(ArityMismatchError, arity_mismatch);
RELSEM_DEFINE_ERROR(SignatureMismatchError, signature_mismatch);
RELSEM_DEFINE_ERROR(FreeArityMismatchError, free_arity_mismatch);
RELSEM_DEFINE_ERROR(NonClosedSentenceError, non_closed_sentence);
RELSEM_DEFINE_ERROR(UnknownEntityError, unknown_entity);
RELSEM_DEFINE_ERROR(PreconditionError, precondition);

#undef RELSEM_DEFINE_ERROR

}  // namespace relsem
