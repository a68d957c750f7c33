#ifndef IMPLIC_ENCODE_HPP
#define IMPLIC_ENCODE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "implic/formula.hpp"
#include "implic/tagsys.hpp"

namespace implic {

// Ordered alphabet giving each letter its 1-based code index.
class Alphabet {
public:
    explicit Alphabet(std::string letters) : letters_(std::move(letters)) {}
    explicit Alphabet(const TagSystem& t) : letters_(t.alphabet) {}

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }

    // Throws InputError for letters outside the alphabet.
    int index_of(char c) const;
    char letter_at(int index) const;  // 1-based

private:
    std::string letters_;
};

enum class Direction { Forward, Backward };

enum class CodeType { Type0 = 0, Type1 = 1, Type2 = 2, Type3 = 3 };

// One member of the code set of a word: the guarded formula together with
// the split lengths that produced it (empty for type 0).
struct WordCode {
    CodeType type;
    std::vector<int> split;
    Formula formula;
};

// Code of the i-th letter: P_i -> (b -> (b -> b)) where P_1 = b -> b and
// P_{k+1} = P_k -> b (left-nested tower over the base variable b).
Formula letter_code(int index, const Variable& base);
Formula letter_code(const Alphabet& a, char letter, const Variable& base);

// The tower P_i itself.
Formula letter_tower(int index, const Variable& base);

// x v y as an abbreviation for (x -> y) -> y.
Formula vee(Formula a, Formula b);

// The guard ((b -> b) -> b) -> b.
Formula triangle(const Variable& base);

// Right-nested (forward) or left-nested (backward) vee-chain of arbitrary
// formulas; used for codes whose tail is a schematic variable.
Formula vee_chain(const std::vector<Formula>& atoms, Direction dir);

// Directed code of a nonempty word: forward is a1 v (a2 v ...),
// backward is ((a1 v a2) v ...) v ak.
Formula nest(const Alphabet& a, const std::string& word, Direction dir, const Variable& base);

// All codes of a nonempty word: the canonical type 0 plus every admissible
// split of types 1-3. Deterministic order: type, then split lexicographic.
std::vector<WordCode> word_codes(const Alphabet& a, const std::string& word,
                                 const Variable& base);

// Structural inverse of word_codes: recognizes a formula that is literally a
// member of some word's code set over the given base variable. Type 0 is
// preferred when several readings exist.
std::optional<std::pair<std::string, CodeType>> decode(const Alphabet& a, const Formula& f,
                                                       const Variable& base);

// All alphabetic formulas with at most max_leaves letter-code leaves:
// letter codes closed under vee. Deterministic order (leaf count, then shape,
// then letters).
std::vector<Formula> alphabetic_formulas(const Alphabet& a, int max_leaves,
                                         const Variable& base);

// Recognizers used by decode, proof generation, and the closure audit.
std::optional<int> as_letter_code(const Formula& f, const Variable& base);
std::optional<std::string> as_forward_word(const Alphabet& a, const Formula& f,
                                           const Variable& base);
std::optional<std::string> as_backward_word(const Alphabet& a, const Formula& f,
                                            const Variable& base);
bool is_alphabetic(const Formula& f, const Variable& base);

const char* code_type_name(CodeType t);

}  // namespace implic

#endif
