#ifndef IMPLIC_FORMULA_HPP
#define IMPLIC_FORMULA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace implic {

// Propositional variable, compared by exact token equality.
// Tokens are [A-Za-z_][A-Za-z0-9_]*.
struct Variable {
    std::string name;

    Variable() = default;
    explicit Variable(std::string n) : name(std::move(n)) {}

    bool operator==(const Variable& o) const { return name == o.name; }
    bool operator!=(const Variable& o) const { return name != o.name; }
    bool operator<(const Variable& o) const { return name < o.name; }
};

// Immutable formula term: a variable, an implication, or an opaque
// connective applied to arguments. Implication is the distinguished
// connective and is never represented as a Conn node. Nodes are shared;
// copying a Formula is cheap and values are safe to share across threads.
class Formula {
public:
    enum class Kind { Var, Imp, Conn };

    static Formula var(Variable v);
    static Formula var(std::string name);
    static Formula imp(Formula premise, Formula conclusion);
    // First use of a connective symbol fixes its arity for the whole run;
    // a later use with a different arity throws std::invalid_argument.
    static Formula conn(std::string symbol, std::vector<Formula> args);

    Kind kind() const { return node_->kind; }
    bool is_var() const { return kind() == Kind::Var; }
    bool is_imp() const { return kind() == Kind::Imp; }
    bool is_conn() const { return kind() == Kind::Conn; }

    const Variable& var() const;
    const Formula& premise() const;      // Imp only
    const Formula& conclusion() const;   // Imp only
    const std::string& symbol() const;   // Conn only
    const std::vector<Formula>& args() const;  // Conn only

    std::size_t hash() const { return node_->hash; }
    // Number of nodes in the term tree.
    std::size_t size() const { return node_->size; }

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

    // Total structural order, used wherever iteration must be deterministic.
    static int compare(const Formula& a, const Formula& b);
    bool operator<(const Formula& o) const { return compare(*this, o) < 0; }

private:
    struct Node {
        Kind kind;
        Variable v;                  // Var
        std::string sym;             // Conn
        std::vector<Formula> kids;   // Imp: {premise, conclusion}; Conn: args
        std::size_t hash = 0;
        std::size_t size = 1;
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

// Finite mapping from variables to formulas; identity elsewhere.
class Substitution {
public:
    Substitution() = default;

    void bind(Variable v, Formula f);
    const Formula* lookup(const Variable& v) const;
    bool empty() const { return bindings_.empty(); }
    std::size_t size() const { return bindings_.size(); }
    const std::map<Variable, Formula>& bindings() const { return bindings_; }

    bool operator==(const Substitution& o) const { return bindings_ == o.bindings_; }

private:
    std::map<Variable, Formula> bindings_;
};

// Simultaneous homomorphic replacement of mapped variables. Formulas
// introduced by the substitution are never rewritten again.
Formula apply_subst(const Substitution& s, const Formula& f);

// compose(s1, s2) applies s1 first, then s2:
// apply(compose(s1,s2), f) == apply(s2, apply(s1, f)).
Substitution compose(const Substitution& s1, const Substitution& s2);

// One-sided matching: find s with apply_subst(s, pattern) == target.
// Variables of the target are treated as constants.
std::optional<Substitution> match_instance(const Formula& pattern, const Formula& target);

// Matching with a seed: extends `acc` consistently or returns false.
bool match_into(const Formula& pattern, const Formula& target, Substitution& acc);

std::set<Variable> vars_of(const Formula& f);
void collect_vars(const Formula& f, std::set<Variable>& out);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar:  formula := imp ; imp := atom ("->" imp)? ;
//           atom := IDENT | IDENT "(" formula ("," formula)* ")" | "(" formula ")"
// "->" is right-associative and has the lowest precedence.
Formula parse_formula(std::string_view text);

// Inverse of parse_formula: minimal parentheses under right-associativity.
std::string to_string(const Formula& f);

}  // namespace implic

#endif
