#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "simonsim/error.hpp"

namespace simonsim {

enum class PauliLetter : unsigned char { I, X, Y, Z };

char to_char(PauliLetter l);
PauliLetter letter_from_char(char c);

// Signed tensor product of I/X/Y/Z. Sign is restricted to +/-1; products that
// would pick up a factor of +/-i throw (they never occur inside a stabilizer
// group or a witness expansion).
struct PauliString {
    int sign = +1;  // +1 or -1
    std::vector<PauliLetter> letters;

    PauliString() = default;
    PauliString(int sign_, std::vector<PauliLetter> letters_)
        : sign(sign_), letters(std::move(letters_)) {}

    // Parse e.g. "XZIII" or "-YYZII".
    static PauliString parse(const std::string& text);

    static PauliString identity(std::size_t n) {
        return PauliString(+1, std::vector<PauliLetter>(n, PauliLetter::I));
    }

    std::size_t size() const { return letters.size(); }
    bool is_identity() const;

    std::string str() const;  // sign prefix only when negative

    bool operator==(const PauliString& other) const = default;
};

// Pauli product with sign tracking; throws DomainError on an imaginary phase.
PauliString multiply(const PauliString& a, const PauliString& b);

// Lexicographic order on (letters, sign); lets stabilizer sets live in std::set.
bool pauli_less(const PauliString& a, const PauliString& b);

}  // namespace simonsim
