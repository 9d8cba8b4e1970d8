#include "simonsim/pauli.hpp"

namespace simonsim {

char to_char(PauliLetter l) {
    switch (l) {
        case PauliLetter::I: return 'I';
        case PauliLetter::X: return 'X';
        case PauliLetter::Y: return 'Y';
        case PauliLetter::Z: return 'Z';
    }
    return '?';
}

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I': return PauliLetter::I;
        case 'X': return PauliLetter::X;
        case 'Y': return PauliLetter::Y;
        case 'Z': return PauliLetter::Z;
    }
    throw DomainError(std::string("invalid Pauli letter '") + c + "'");
}

PauliString PauliString::parse(const std::string& text) {
    PauliString p;
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        p.sign = text[0] == '-' ? -1 : +1;
        start = 1;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        p.letters.push_back(letter_from_char(text[i]));
    }
    return p;
}

bool PauliString::is_identity() const {
    for (PauliLetter l : letters) {
        if (l != PauliLetter::I) return false;
    }
    return true;
}

std::string PauliString::str() const {
    std::string out;
    if (sign < 0) out.push_back('-');
    for (PauliLetter l : letters) out.push_back(to_char(l));
    return out;
}

namespace {

// Single-qubit product a*b = phase * letter, phase a power of i in {0,1,2,3}.
struct LetterProduct {
    PauliLetter letter;
    int phase_power;
};

LetterProduct letter_multiply(PauliLetter a, PauliLetter b) {
    if (a == PauliLetter::I) return {b, 0};
    if (b == PauliLetter::I) return {a, 0};
    if (a == b) return {PauliLetter::I, 0};
    // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
    auto cyc = [](PauliLetter u, PauliLetter v) {
        return (u == PauliLetter::X && v == PauliLetter::Y) ||
               (u == PauliLetter::Y && v == PauliLetter::Z) ||
               (u == PauliLetter::Z && v == PauliLetter::X);
    };
    PauliLetter third;
    if ((a == PauliLetter::X && b == PauliLetter::Y) || (a == PauliLetter::Y && b == PauliLetter::X))
        third = PauliLetter::Z;
    else if ((a == PauliLetter::Y && b == PauliLetter::Z) || (a == PauliLetter::Z && b == PauliLetter::Y))
        third = PauliLetter::X;
    else
        third = PauliLetter::Y;
    return {third, cyc(a, b) ? 1 : 3};
}

}  // namespace

PauliString multiply(const PauliString& a, const PauliString& b) {
    if (a.size() != b.size()) throw DomainError("Pauli length mismatch in multiply");
    PauliString out;
    out.letters.reserve(a.size());
    int phase_power = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        LetterProduct p = letter_multiply(a.letters[k], b.letters[k]);
        out.letters.push_back(p.letter);
        phase_power = (phase_power + p.phase_power) & 3;
    }
    if (phase_power == 1 || phase_power == 3) {
        throw DomainError("Pauli product has imaginary phase");
    }
    out.sign = a.sign * b.sign * (phase_power == 2 ? -1 : +1);
    return out;
}

bool pauli_less(const PauliString& a, const PauliString& b) {
    if (a.letters != b.letters) return a.letters < b.letters;
    return a.sign < b.sign;
}

}  // namespace simonsim
