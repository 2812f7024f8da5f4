#pragma once

#include <stdexcept>
#include <string>

namespace boolhier {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (DFA description, regex, marked-word string).
struct SyntaxError : Error {
    using Error::Error;
};

// Structurally invalid automaton (missing/duplicate transition, bad state id).
struct ValidationError : Error {
    using Error::Error;
};

// A word or marked word uses a letter outside the relevant alphabet.
struct AlphabetError : Error {
    using Error::Error;
};

// Two automata that must share an alphabet do not.
struct AlphabetMismatch : Error {
    using Error::Error;
};

// A parameter (k, d, word length bound, ...) exceeds its configured cap.
struct BoundsError : Error {
    using Error::Error;
};

// A search or closure would exceed its configured size budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// decide_sigmaL2_binary requires a two-letter alphabet.
struct AlphabetArityError : Error {
    using Error::Error;
};

// decide_sigmaL2_binary requires a star-free (aperiodic) language.
struct NotStarFreeError : Error {
    using Error::Error;
};

}  // namespace boolhier
