#include "implic/formula.hpp"

#include <cctype>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace implic {

namespace {

std::size_t combine_hash(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Connective arities are fixed process-wide on first use.
std::mutex arity_mutex;
std::unordered_map<std::string, std::size_t>& arity_table() {
    static std::unordered_map<std::string, std::size_t> table;
    return table;
}

void register_arity(const std::string& sym, std::size_t arity) {
    std::lock_guard<std::mutex> lock(arity_mutex);
    auto [it, inserted] = arity_table().emplace(sym, arity);
    if (!inserted && it->second != arity)
        throw std::invalid_argument("connective '" + sym + "' used with arity " +
                                    std::to_string(arity) + " but fixed at " +
                                    std::to_string(it->second));
}

}  // namespace

Formula Formula::var(Variable v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->hash = combine_hash(0x11, std::hash<std::string>{}(v.name));
    n->v = std::move(v);
    n->size = 1;
    return Formula(std::move(n));
}

Formula Formula::var(std::string name) { return var(Variable(std::move(name))); }

Formula Formula::imp(Formula premise, Formula conclusion) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Imp;
    n->hash = combine_hash(combine_hash(0x22, premise.hash()), conclusion.hash());
    n->size = 1 + premise.size() + conclusion.size();
    n->kids.push_back(std::move(premise));
    n->kids.push_back(std::move(conclusion));
    return Formula(std::move(n));
}

Formula Formula::conn(std::string symbol, std::vector<Formula> args) {
    register_arity(symbol, args.size());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Conn;
    std::size_t h = combine_hash(0x33, std::hash<std::string>{}(symbol));
    for (const auto& a : args) {
        h = combine_hash(h, a.hash());
        n->size += a.size();
    }
    n->hash = h;
    n->sym = std::move(symbol);
    n->kids = std::move(args);
    return Formula(std::move(n));
}

const Variable& Formula::var() const { return node_->v; }
const Formula& Formula::premise() const { return node_->kids[0]; }
const Formula& Formula::conclusion() const { return node_->kids[1]; }
const std::string& Formula::symbol() const { return node_->sym; }
const std::vector<Formula>& Formula::args() const { return node_->kids; }

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (node_->hash != o.node_->hash || node_->kind != o.node_->kind ||
        node_->size != o.node_->size)
        return false;
    switch (node_->kind) {
        case Kind::Var:
            return node_->v == o.node_->v;
        case Kind::Imp:
            return premise() == o.premise() && conclusion() == o.conclusion();
        case Kind::Conn: {
            if (node_->sym != o.node_->sym || node_->kids.size() != o.node_->kids.size())
                return false;
            for (std::size_t i = 0; i < node_->kids.size(); ++i)
                if (node_->kids[i] != o.node_->kids[i]) return false;
            return true;
        }
    }
    return false;
}

int Formula::compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Kind::Var:
            return a.var().name.compare(b.var().name);
        case Kind::Imp: {
            int c = compare(a.premise(), b.premise());
            if (c != 0) return c;
            return compare(a.conclusion(), b.conclusion());
        }
        case Kind::Conn: {
            int c = a.symbol().compare(b.symbol());
            if (c != 0) return c;
            if (a.args().size() != b.args().size())
                return a.args().size() < b.args().size() ? -1 : 1;
            for (std::size_t i = 0; i < a.args().size(); ++i) {
                c = compare(a.args()[i], b.args()[i]);
                if (c != 0) return c;
            }
            return 0;
        }
    }
    return 0;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

void Substitution::bind(Variable v, Formula f) {
    bindings_.insert_or_assign(std::move(v), std::move(f));
}

const Formula* Substitution::lookup(const Variable& v) const {
    auto it = bindings_.find(v);
    return it == bindings_.end() ? nullptr : &it->second;
}

Formula apply_subst(const Substitution& s, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Var: {
            const Formula* b = s.lookup(f.var());
            return b ? *b : f;
        }
        case Formula::Kind::Imp:
            return Formula::imp(apply_subst(s, f.premise()), apply_subst(s, f.conclusion()));
        case Formula::Kind::Conn: {
            std::vector<Formula> args;
            args.reserve(f.args().size());
            for (const auto& a : f.args()) args.push_back(apply_subst(s, a));
            return Formula::conn(f.symbol(), std::move(args));
        }
    }
    throw std::logic_error("unreachable formula kind");
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
    Substitution out;
    for (const auto& [v, f] : s1.bindings()) out.bind(v, apply_subst(s2, f));
    for (const auto& [v, f] : s2.bindings())
        if (!s1.lookup(v)) out.bind(v, f);
    return out;
}

bool match_into(const Formula& pattern, const Formula& target, Substitution& acc) {
    switch (pattern.kind()) {
        case Formula::Kind::Var: {
            const Formula* bound = acc.lookup(pattern.var());
            if (bound) return *bound == target;
            acc.bind(pattern.var(), target);
            return true;
        }
        case Formula::Kind::Imp:
            return target.is_imp() && match_into(pattern.premise(), target.premise(), acc) &&
                   match_into(pattern.conclusion(), target.conclusion(), acc);
        case Formula::Kind::Conn: {
            if (!target.is_conn() || pattern.symbol() != target.symbol() ||
                pattern.args().size() != target.args().size())
                return false;
            for (std::size_t i = 0; i < pattern.args().size(); ++i)
                if (!match_into(pattern.args()[i], target.args()[i], acc)) return false;
            return true;
        }
    }
    return false;
}

std::optional<Substitution> match_instance(const Formula& pattern, const Formula& target) {
    Substitution s;
    if (match_into(pattern, target, s)) return s;
    return std::nullopt;
}

void collect_vars(const Formula& f, std::set<Variable>& out) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            out.insert(f.var());
            return;
        case Formula::Kind::Imp:
            collect_vars(f.premise(), out);
            collect_vars(f.conclusion(), out);
            return;
        case Formula::Kind::Conn:
            for (const auto& a : f.args()) collect_vars(a, out);
            return;
    }
}

std::set<Variable> vars_of(const Formula& f) {
    std::set<Variable> out;
    collect_vars(f, out);
    return out;
}

// ---------- parsing ----------

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool peek_arrow() {
        skip_ws();
        return pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>';
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size())
            throw ParseError("expected identifier", pos);
        char c = text[pos];
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            throw ParseError("expected identifier", pos);
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    Formula formula() {
        Formula lhs = atom();
        if (peek_arrow()) {
            pos += 2;
            return Formula::imp(std::move(lhs), formula());
        }
        return lhs;
    }

    Formula atom() {
        skip_ws();
        if (peek_is('(')) {
            ++pos;
            Formula inner = formula();
            expect(')');
            return inner;
        }
        std::string name = ident();
        if (peek_is('(')) {
            ++pos;
            std::vector<Formula> args;
            args.push_back(formula());
            while (peek_is(',')) {
                ++pos;
                args.push_back(formula());
            }
            expect(')');
            return Formula::conn(std::move(name), std::move(args));
        }
        return Formula::var(std::move(name));
    }
};

void print_rec(const Formula& f, std::ostream& os) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            os << f.var().name;
            return;
        case Formula::Kind::Imp:
            if (f.premise().is_imp()) {
                os << '(';
                print_rec(f.premise(), os);
                os << ')';
            } else {
                print_rec(f.premise(), os);
            }
            os << " -> ";
            print_rec(f.conclusion(), os);
            return;
        case Formula::Kind::Conn: {
            os << f.symbol() << '(';
            bool first = true;
            for (const auto& a : f.args()) {
                if (!first) os << ", ";
                first = false;
                print_rec(a, os);
            }
            os << ')';
            return;
        }
    }
}

}  // namespace

Formula parse_formula(std::string_view text) {
    Parser p{text};
    Formula f = p.formula();
    if (!p.at_end())
        throw ParseError("trailing input", p.pos);
    return f;
}

std::string to_string(const Formula& f) {
    std::ostringstream os;
    print_rec(f, os);
    return os.str();
}

}  // namespace implic
