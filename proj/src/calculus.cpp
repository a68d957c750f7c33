#include "implic/calculus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace implic {

const char* group_name(AxiomGroup g) {
    switch (g) {
        case AxiomGroup::W: return "W";
        case AxiomGroup::T1: return "T1";
        case AxiomGroup::T2: return "T2";
        case AxiomGroup::H: return "H";
        case AxiomGroup::R1: return "R1";
        case AxiomGroup::R2: return "R2";
        case AxiomGroup::Builtin: return "builtin";
    }
    return "?";
}

namespace {

void collect_signature(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            return;
        case Formula::Kind::Imp:
            collect_signature(f.premise(), out);
            collect_signature(f.conclusion(), out);
            return;
        case Formula::Kind::Conn:
            out.insert(f.symbol());
            for (const auto& a : f.args()) collect_signature(a, out);
            return;
    }
}

AxiomGroup group_from_label(const std::string& label) {
    std::string prefix = label.substr(0, label.find('.'));
    if (prefix == "W") return AxiomGroup::W;
    if (prefix == "T1") return AxiomGroup::T1;
    if (prefix == "T2") return AxiomGroup::T2;
    if (prefix == "H") return AxiomGroup::H;
    if (prefix == "R1") return AxiomGroup::R1;
    if (prefix == "R2") return AxiomGroup::R2;
    return AxiomGroup::Builtin;
}

}  // namespace

Calculus::Calculus(std::string name, std::vector<Axiom> axioms)
    : name_(std::move(name)), axioms_(std::move(axioms)) {
    signature_.insert("->");
    std::set<std::string> labels;
    for (const auto& ax : axioms_) {
        if (!labels.insert(ax.label).second)
            throw InputError("duplicate axiom label: " + ax.label);
        collect_signature(ax.formula, signature_);
    }
}

const Axiom* Calculus::find(const std::string& label) const {
    for (const auto& ax : axioms_)
        if (ax.label == label) return &ax;
    return nullptr;
}

const Axiom* Calculus::find_by_formula(const Formula& f) const {
    for (const auto& ax : axioms_)
        if (ax.formula == f) return &ax;
    return nullptr;
}

const Axiom* Calculus::find_variant(const Formula& pattern) const {
    for (const auto& ax : axioms_) {
        auto fwd = match_instance(pattern, ax.formula);
        auto bwd = match_instance(ax.formula, pattern);
        if (!fwd || !bwd) continue;
        bool renaming = true;
        for (const auto& [v, f] : fwd->bindings())
            if (!f.is_var()) renaming = false;
        if (renaming) return &ax;
    }
    return nullptr;
}

bool Calculus::has_group(AxiomGroup g) const { return count_group(g) > 0; }

std::size_t Calculus::count_group(AxiomGroup g) const {
    std::size_t n = 0;
    for (const auto& ax : axioms_)
        if (ax.group == g) ++n;
    return n;
}

std::string Calculus::to_text() const {
    std::ostringstream out;
    out << "calculus: " << name_ << "\n";
    for (const auto& ax : axioms_) out << ax.label << ": " << to_string(ax.formula) << "\n";
    return out.str();
}

Calculus Calculus::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string name;
    std::vector<Axiom> axioms;
    bool have_name = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw InputError("bad calculus line: " + line);
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        if (!have_name) {
            if (key != "calculus") throw InputError("expected 'calculus: <name>' first");
            auto start = value.find_first_not_of(' ');
            name = start == std::string::npos ? "" : value.substr(start);
            have_name = true;
            continue;
        }
        axioms.push_back({key, group_from_label(key), parse_formula(value)});
    }
    if (!have_name) throw InputError("missing 'calculus:' header");
    return Calculus(name, std::move(axioms));
}

Calculus Calculus::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open calculus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

// ---------- builtin systems ----------

namespace {

Axiom make_axiom(const std::string& label, const char* text) {
    return {label, AxiomGroup::Builtin, parse_formula(text)};
}

}  // namespace

bool is_builtin_calculus(const std::string& name) {
    return name == "int_impl" || name == "cl_impl" || name == "lukasiewicz_single" ||
           name == "meredith_single";
}

Calculus builtin_calculus(const std::string& name) {
    if (name == "int_impl")
        return Calculus(name, {make_axiom("A1", "x -> (y -> x)"),
                               make_axiom("A2", "(x -> (y -> z)) -> ((x -> y) -> (x -> z))")});
    if (name == "cl_impl")
        return Calculus(name, {make_axiom("A1", "x -> (y -> x)"),
                               make_axiom("A2", "(x -> (y -> z)) -> ((x -> y) -> (x -> z))"),
                               make_axiom("Peirce", "((x -> y) -> x) -> x")});
    if (name == "lukasiewicz_single")
        return Calculus(name, {make_axiom("L", "((x -> y) -> z) -> ((z -> x) -> (u -> x))")});
    if (name == "meredith_single")
        return Calculus(name,
                        {make_axiom("M",
                                    "((x -> y) -> z) -> (u -> ((y -> (z -> v)) -> (y -> v)))")});
    throw InputError("unknown builtin calculus: " + name);
}

// ---------- the reduction calculus ----------

namespace {

// All words of the given length over the alphabet, lexicographic in the
// alphabet order.
std::vector<std::string> words_of_length(const std::string& alphabet, int len) {
    std::vector<std::string> out{""};
    for (int k = 0; k < len; ++k) {
        std::vector<std::string> next;
        next.reserve(out.size() * alphabet.size());
        for (const auto& w : out)
            for (char c : alphabet) next.push_back(w + c);
        out = std::move(next);
    }
    return out;
}

}  // namespace

Calculus build_reduction(const TagSystem& t, const std::string& omega, const Calculus& p0) {
    t.validate();
    if (omega.empty()) throw InputError("omega must be nonempty");
    for (char c : omega)
        if (t.letter_index(c) == 0)
            throw InputError(std::string("omega letter '") + c + "' not in alphabet");

    std::set<Variable> p0_vars;
    for (const auto& ax : p0.axioms()) collect_vars(ax.formula, p0_vars);
    std::vector<Variable> fresh;
    for (int k = 0; static_cast<int>(fresh.size()) < 4; ++k) {
        Variable v("v" + std::to_string(k));
        if (!p0_vars.count(v)) fresh.push_back(v);
    }
    const Variable base = fresh[0];
    const Variable y = fresh[1], z = fresh[2], u = fresh[3];
    const Formula yf = Formula::var(y), zf = Formula::var(z), uf = Formula::var(u);

    const Alphabet alpha(t);
    const Formula guard = triangle(base);
    auto code = [&](char c) { return letter_code(alpha, c, base); };
    auto fwd = [&](const std::string& w) { return nest(alpha, w, Direction::Forward, base); };
    auto guarded = [&](Formula body) { return Formula::imp(guard, std::move(body)); };

    std::vector<Axiom> axioms;
    axioms.push_back({"W", AxiomGroup::W, guarded(fwd(omega))});

    const auto middles = words_of_length(t.alphabet, t.deletion - 1);

    // T1: (guard -> fwd(a_i alpha y)) -> (guard -> fwd(y omega_i))
    int n = 0;
    for (std::size_t i = 0; i < t.alphabet.size(); ++i) {
        for (const auto& mid : middles) {
            std::vector<Formula> lhs{code(t.alphabet[i])};
            for (char c : mid) lhs.push_back(code(c));
            lhs.push_back(yf);
            std::vector<Formula> rhs{yf};
            for (char c : t.productions[i]) rhs.push_back(code(c));
            axioms.push_back({"T1." + std::to_string(++n), AxiomGroup::T1,
                              Formula::imp(guarded(vee_chain(lhs, Direction::Forward)),
                                           guarded(vee_chain(rhs, Direction::Forward)))});
        }
    }
    // T2: (guard -> fwd(a_i alpha)) -> (guard -> fwd(omega_i))
    n = 0;
    for (std::size_t i = 0; i < t.alphabet.size(); ++i) {
        for (const auto& mid : middles) {
            std::string whole = std::string(1, t.alphabet[i]) + mid;
            axioms.push_back({"T2." + std::to_string(++n), AxiomGroup::T2,
                              Formula::imp(guarded(fwd(whole)),
                                           guarded(fwd(t.productions[i])))});
        }
    }
    // H: (guard -> fwd(alpha)) -> A for all 0 < |alpha| < d and A in p0
    n = 0;
    for (int len = 1; len < t.deletion; ++len) {
        for (const auto& w : words_of_length(t.alphabet, len)) {
            for (const auto& ax : p0.axioms()) {
                axioms.push_back({"H." + std::to_string(++n), AxiomGroup::H,
                                  Formula::imp(guarded(fwd(w)), ax.formula)});
            }
        }
    }
    // R1: (guard -> (y v (a v z)) v u) -> (guard -> ((y v a) v z) v u)
    n = 0;
    for (char c : t.alphabet) {
        axioms.push_back({"R1." + std::to_string(++n), AxiomGroup::R1,
                          Formula::imp(guarded(vee(vee(yf, vee(code(c), zf)), uf)),
                                       guarded(vee(vee(vee(yf, code(c)), zf), uf)))});
    }
    // R2: (guard -> (y v a) v z) -> (guard -> y v (a v z))
    n = 0;
    for (char c : t.alphabet) {
        axioms.push_back({"R2." + std::to_string(++n), AxiomGroup::R2,
                          Formula::imp(guarded(vee(vee(yf, code(c)), zf)),
                                       guarded(vee(yf, vee(code(c), zf))))});
    }

    Calculus result("P_" + omega + "_" + p0.name(), std::move(axioms));
    result.attach_reduction({t, omega, base, y, z, u, p0.name(), p0.axioms()});
    return result;
}

Calculus subsystem(const Calculus& c, const std::set<AxiomGroup>& groups) {
    std::vector<Axiom> kept;
    for (AxiomGroup g : groups)
        if (!c.has_group(g))
            throw InputError(std::string("calculus has no axioms in group ") + group_name(g));
    for (const auto& ax : c.axioms())
        if (groups.count(ax.group)) kept.push_back(ax);
    std::string name = c.name() + "_sub";
    for (AxiomGroup g : {AxiomGroup::W, AxiomGroup::T1, AxiomGroup::T2, AxiomGroup::H,
                         AxiomGroup::R1, AxiomGroup::R2})
        if (groups.count(g)) name += std::string("_") + group_name(g);
    Calculus result(std::move(name), std::move(kept));
    if (c.reduction()) result.attach_reduction(*c.reduction());
    return result;
}

}  // namespace implic
