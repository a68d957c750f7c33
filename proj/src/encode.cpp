#include "implic/encode.hpp"

namespace implic {

int Alphabet::index_of(char c) const {
    auto pos = letters_.find(c);
    if (pos == std::string::npos)
        throw InputError(std::string("letter '") + c + "' not in alphabet");
    return static_cast<int>(pos) + 1;
}

char Alphabet::letter_at(int index) const {
    if (index < 1 || index > static_cast<int>(letters_.size()))
        throw InputError("letter index out of range: " + std::to_string(index));
    return letters_[static_cast<std::size_t>(index - 1)];
}

Formula letter_tower(int index, const Variable& base) {
    if (index < 1) throw InputError("letter index must be >= 1");
    Formula b = Formula::var(base);
    Formula tower = Formula::imp(b, b);  // P_1
    for (int k = 1; k < index; ++k) tower = Formula::imp(std::move(tower), b);
    return tower;
}

Formula letter_code(int index, const Variable& base) {
    Formula b = Formula::var(base);
    Formula head = Formula::imp(b, Formula::imp(b, b));
    return Formula::imp(letter_tower(index, base), std::move(head));
}

Formula letter_code(const Alphabet& a, char letter, const Variable& base) {
    return letter_code(a.index_of(letter), base);
}

Formula vee(Formula a, Formula b) {
    return Formula::imp(Formula::imp(std::move(a), b), b);
}

Formula triangle(const Variable& base) {
    Formula b = Formula::var(base);
    return Formula::imp(Formula::imp(Formula::imp(b, b), b), b);
}

Formula vee_chain(const std::vector<Formula>& atoms, Direction dir) {
    if (atoms.empty()) throw InputError("empty vee chain");
    if (dir == Direction::Forward) {
        Formula acc = atoms.back();
        for (std::size_t i = atoms.size() - 1; i-- > 0;) acc = vee(atoms[i], std::move(acc));
        return acc;
    }
    Formula acc = atoms.front();
    for (std::size_t i = 1; i < atoms.size(); ++i) acc = vee(std::move(acc), atoms[i]);
    return acc;
}

Formula nest(const Alphabet& a, const std::string& word, Direction dir, const Variable& base) {
    if (word.empty()) throw InputError("cannot encode the empty word");
    std::vector<Formula> codes;
    codes.reserve(word.size());
    for (char c : word) codes.push_back(letter_code(a, c, base));
    return vee_chain(codes, dir);
}

std::vector<WordCode> word_codes(const Alphabet& a, const std::string& word,
                                 const Variable& base) {
    if (word.empty()) throw InputError("cannot encode the empty word");
    const Formula guard = triangle(base);
    const int n = static_cast<int>(word.size());
    auto part = [&](int from, int len) { return word.substr(static_cast<std::size_t>(from),
                                                            static_cast<std::size_t>(len)); };
    auto fwd = [&](const std::string& w) { return nest(a, w, Direction::Forward, base); };
    auto bwd = [&](const std::string& w) { return nest(a, w, Direction::Backward, base); };

    std::vector<WordCode> out;
    out.push_back({CodeType::Type0, {}, Formula::imp(guard, fwd(word))});
    // Type 1: a1 a2 with |a1| >= 2, |a2| >= 1
    for (int l1 = 2; l1 <= n - 1; ++l1)
        out.push_back({CodeType::Type1,
                       {l1, n - l1},
                       Formula::imp(guard, vee(fwd(part(0, l1)), fwd(part(l1, n - l1))))});
    // Type 2: a1 a2 a3 with |a1| >= 2, |a2| >= 2, |a3| >= 1
    for (int l1 = 2; l1 <= n - 3; ++l1)
        for (int l2 = 2; l2 <= n - l1 - 1; ++l2)
            out.push_back({CodeType::Type2,
                           {l1, l2, n - l1 - l2},
                           Formula::imp(guard, vee(vee(bwd(part(0, l1)), fwd(part(l1, l2))),
                                                   fwd(part(l1 + l2, n - l1 - l2))))});
    // Type 3: a1 a2 with |a1| >= 3, |a2| >= 1
    for (int l1 = 3; l1 <= n - 1; ++l1)
        out.push_back({CodeType::Type3,
                       {l1, n - l1},
                       Formula::imp(guard, vee(bwd(part(0, l1)), fwd(part(l1, n - l1))))});
    return out;
}

std::optional<int> as_letter_code(const Formula& f, const Variable& base) {
    // f = P_i -> (b -> (b -> b))
    if (!f.is_imp()) return std::nullopt;
    Formula b = Formula::var(base);
    if (f.conclusion() != Formula::imp(b, Formula::imp(b, b))) return std::nullopt;
    int height = 1;
    const Formula* t = &f.premise();
    while (true) {
        if (!t->is_imp() || t->conclusion() != b) return std::nullopt;
        if (t->premise() == b) return height;  // reached P_1
        ++height;
        t = &t->premise();
    }
}

namespace {

// Splits f as vee(l, r) if it has that shape: (l -> r) -> r.
std::optional<std::pair<Formula, Formula>> as_vee(const Formula& f) {
    if (!f.is_imp() || !f.premise().is_imp()) return std::nullopt;
    if (f.premise().conclusion() != f.conclusion()) return std::nullopt;
    return std::make_pair(f.premise().premise(), f.conclusion());
}

}  // namespace

std::optional<std::string> as_forward_word(const Alphabet& a, const Formula& f,
                                           const Variable& base) {
    // Letter codes are never vees, so the reading is unambiguous.
    if (auto i = as_letter_code(f, base)) {
        if (*i > static_cast<int>(a.size())) return std::nullopt;
        return std::string(1, a.letter_at(*i));
    }
    auto v = as_vee(f);
    if (!v) return std::nullopt;
    auto head = as_letter_code(v->first, base);
    if (!head || *head > static_cast<int>(a.size())) return std::nullopt;
    auto rest = as_forward_word(a, v->second, base);
    if (!rest) return std::nullopt;
    return std::string(1, a.letter_at(*head)) + *rest;
}

std::optional<std::string> as_backward_word(const Alphabet& a, const Formula& f,
                                            const Variable& base) {
    if (auto i = as_letter_code(f, base)) {
        if (*i > static_cast<int>(a.size())) return std::nullopt;
        return std::string(1, a.letter_at(*i));
    }
    auto v = as_vee(f);
    if (!v) return std::nullopt;
    auto last = as_letter_code(v->second, base);
    if (!last || *last > static_cast<int>(a.size())) return std::nullopt;
    auto front = as_backward_word(a, v->first, base);
    if (!front) return std::nullopt;
    return *front + std::string(1, a.letter_at(*last));
}

std::optional<std::pair<std::string, CodeType>> decode(const Alphabet& a, const Formula& f,
                                                       const Variable& base) {
    if (!f.is_imp() || f.premise() != triangle(base)) return std::nullopt;
    const Formula& body = f.conclusion();

    if (auto w = as_forward_word(a, body, base)) return std::make_pair(*w, CodeType::Type0);

    auto v = as_vee(body);
    if (!v) return std::nullopt;
    const Formula& left = v->first;
    const Formula& right = v->second;
    auto rightw = as_forward_word(a, right, base);
    if (!rightw) return std::nullopt;

    // Type 1: forward(a1) v forward(a2), |a1| >= 2 (left is a vee, else the
    // type 0 reading above would have fired).
    if (auto lw = as_forward_word(a, left, base)) {
        if (lw->size() >= 2) return std::make_pair(*lw + *rightw, CodeType::Type1);
        return std::nullopt;
    }
    // Type 3: backward(a1) v forward(a2), |a1| >= 3.
    if (auto lw = as_backward_word(a, left, base)) {
        if (lw->size() >= 3) return std::make_pair(*lw + *rightw, CodeType::Type3);
        return std::nullopt;
    }
    // Type 2: (backward(a1) v forward(a2)) v forward(a3), |a1|,|a2| >= 2.
    if (auto lv = as_vee(left)) {
        auto w1 = as_backward_word(a, lv->first, base);
        auto w2 = as_forward_word(a, lv->second, base);
        if (w1 && w2 && w1->size() >= 2 && w2->size() >= 2)
            return std::make_pair(*w1 + *w2 + *rightw, CodeType::Type2);
    }
    return std::nullopt;
}

bool is_alphabetic(const Formula& f, const Variable& base) {
    if (as_letter_code(f, base)) return true;
    auto v = as_vee(f);
    return v && is_alphabetic(v->first, base) && is_alphabetic(v->second, base);
}

namespace {

void build_trees(const Alphabet& a, int leaves, const Variable& base,
                 std::vector<Formula>& out) {
    if (leaves == 1) {
        for (std::size_t i = 1; i <= a.size(); ++i)
            out.push_back(letter_code(static_cast<int>(i), base));
        return;
    }
    for (int l = 1; l <= leaves - 1; ++l) {
        std::vector<Formula> lefts, rights;
        build_trees(a, l, base, lefts);
        build_trees(a, leaves - l, base, rights);
        for (const auto& lf : lefts)
            for (const auto& rf : rights) out.push_back(vee(lf, rf));
    }
}

}  // namespace

std::vector<Formula> alphabetic_formulas(const Alphabet& a, int max_leaves,
                                         const Variable& base) {
    if (max_leaves < 1) throw InputError("max_leaves must be >= 1");
    std::vector<Formula> out;
    for (int k = 1; k <= max_leaves; ++k) build_trees(a, k, base, out);
    return out;
}

const char* code_type_name(CodeType t) {
    switch (t) {
        case CodeType::Type0: return "0";
        case CodeType::Type1: return "1";
        case CodeType::Type2: return "2";
        case CodeType::Type3: return "3";
    }
    return "?";
}

}  // namespace implic
