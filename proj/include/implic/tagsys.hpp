#ifndef IMPLIC_TAGSYS_HPP
#define IMPLIC_TAGSYS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace implic {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Post tag system: an ordered alphabet, one nonempty production word per
// letter, and a deletion number d. A step on a word of length >= d removes
// the first d letters and appends the production of the first letter.
struct TagSystem {
    std::string alphabet;                   // letters in order a_1 ... a_m
    std::vector<std::string> productions;   // aligned with alphabet
    int deletion = 0;

    // 1-based letter index, 0 if the letter is not in the alphabet.
    int letter_index(char c) const;
    const std::string& production(char c) const;

    // Throws InputError if a production is empty, uses a foreign letter,
    // the alphabet has duplicates, or deletion < 1.
    void validate() const;

    // Line-based format:
    //   deletion: <d>
    //   <letter> -> <word>     (one line per letter, in alphabet order)
    static TagSystem parse(const std::string& text);
    static TagSystem load(const std::string& path);
    std::string to_text() const;
};

struct TagTrace {
    std::vector<std::string> words;  // nonempty; words[0] is the input
    bool halted = false;             // last word shorter than deletion number
    bool fuel_exhausted = false;

    const std::string& last() const { return words.back(); }
};

// One production: a_i b g -> g w_i with |b| = d-1. Returns nothing when the
// word is shorter than d. Letters outside the alphabet raise InputError.
std::optional<std::string> step(const TagSystem& t, std::string_view word);

// Iterates step until the word is shorter than d or fuel runs out,
// recording every intermediate word.
TagTrace run(const TagSystem& t, const std::string& word, long fuel);

}  // namespace implic

#endif
