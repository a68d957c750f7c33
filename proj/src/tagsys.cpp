#include "implic/tagsys.hpp"

#include <fstream>
#include <sstream>

namespace implic {

int TagSystem::letter_index(char c) const {
    auto pos = alphabet.find(c);
    return pos == std::string::npos ? 0 : static_cast<int>(pos) + 1;
}

const std::string& TagSystem::production(char c) const {
    int i = letter_index(c);
    if (i == 0) throw InputError(std::string("letter '") + c + "' not in alphabet");
    return productions[static_cast<std::size_t>(i - 1)];
}

void TagSystem::validate() const {
    if (deletion < 1) throw InputError("deletion number must be positive");
    if (alphabet.empty()) throw InputError("empty alphabet");
    if (alphabet.size() != productions.size())
        throw InputError("alphabet/production count mismatch");
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet.find(alphabet[i]) != i)
            throw InputError(std::string("duplicate letter '") + alphabet[i] + "'");
        if (productions[i].empty())
            throw InputError(std::string("empty production for '") + alphabet[i] + "'");
        for (char c : productions[i])
            if (letter_index(c) == 0)
                throw InputError(std::string("production letter '") + c + "' not in alphabet");
    }
}

TagSystem TagSystem::parse(const std::string& text) {
    TagSystem t;
    std::istringstream in(text);
    std::string line;
    bool have_deletion = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_deletion) {
            std::istringstream ls(line);
            std::string key;
            ls >> key;
            if (key != "deletion:") throw InputError("expected 'deletion: <d>' first");
            if (!(ls >> t.deletion)) throw InputError("bad deletion number");
            have_deletion = true;
            continue;
        }
        std::istringstream ls(line);
        std::string letter, arrow, word;
        if (!(ls >> letter >> arrow >> word) || letter.size() != 1 || arrow != "->")
            throw InputError("expected '<letter> -> <word>': " + line);
        t.alphabet.push_back(letter[0]);
        t.productions.push_back(word);
    }
    if (!have_deletion) throw InputError("missing 'deletion:' line");
    t.validate();
    return t;
}

TagSystem TagSystem::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open tag-system file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string TagSystem::to_text() const {
    std::ostringstream out;
    out << "deletion: " << deletion << "\n";
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        out << alphabet[i] << " -> " << productions[i] << "\n";
    return out.str();
}

std::optional<std::string> step(const TagSystem& t, std::string_view word) {
    for (char c : word)
        if (t.letter_index(c) == 0)
            throw InputError(std::string("letter '") + c + "' not in alphabet");
    if (static_cast<long>(word.size()) < t.deletion) return std::nullopt;
    std::string next(word.substr(static_cast<std::size_t>(t.deletion)));
    next += t.production(word[0]);
    return next;
}

TagTrace run(const TagSystem& t, const std::string& word, long fuel) {
    TagTrace trace;
    trace.words.push_back(word);
    for (long i = 0; i < fuel; ++i) {
        auto next = step(t, trace.words.back());
        if (!next) {
            trace.halted = true;
            return trace;
        }
        trace.words.push_back(std::move(*next));
    }
    // Out of fuel; the last word may still be terminal.
    trace.halted = static_cast<long>(trace.words.back().size()) < t.deletion;
    trace.fuel_exhausted = !trace.halted;
    return trace;
}

}  // namespace implic
