#include "implic/unify.hpp"

#include <map>

namespace implic {

std::pair<Formula, Substitution> rename_apart(const Formula& f,
                                              const std::set<Variable>& forbidden) {
    std::set<Variable> used = vars_of(f);
    Substitution renaming;
    std::set<Variable> taken = forbidden;
    taken.insert(used.begin(), used.end());
    for (const Variable& v : used) {
        if (!forbidden.count(v)) continue;
        for (int k = 0;; ++k) {
            Variable fresh(v.name + "_" + std::to_string(k));
            if (!taken.count(fresh)) {
                taken.insert(fresh);
                renaming.bind(v, Formula::var(fresh));
                break;
            }
        }
    }
    return {apply_subst(renaming, f), std::move(renaming)};
}

namespace {

// Triangular binding store: a variable maps to a formula that may itself
// contain bound variables. Resolved to idempotent form at the end.
using Bindings = std::map<Variable, Formula>;

const Formula& walk(const Formula& f, const Bindings& b) {
    const Formula* cur = &f;
    while (cur->is_var()) {
        auto it = b.find(cur->var());
        if (it == b.end()) break;
        cur = &it->second;
    }
    return *cur;
}

bool occurs(const Variable& v, const Formula& f, const Bindings& b) {
    const Formula& g = walk(f, b);
    switch (g.kind()) {
        case Formula::Kind::Var:
            return g.var() == v;
        case Formula::Kind::Imp:
            return occurs(v, g.premise(), b) || occurs(v, g.conclusion(), b);
        case Formula::Kind::Conn:
            for (const auto& a : g.args())
                if (occurs(v, a, b)) return true;
            return false;
    }
    return false;
}

bool unify_rec(const Formula& a0, const Formula& b0, Bindings& binds) {
    const Formula& a = walk(a0, binds);
    const Formula& b = walk(b0, binds);
    if (a.is_var() && b.is_var() && a.var() == b.var()) return true;
    if (a.is_var()) {
        if (occurs(a.var(), b, binds)) return false;
        binds.emplace(a.var(), b);
        return true;
    }
    if (b.is_var()) {
        if (occurs(b.var(), a, binds)) return false;
        binds.emplace(b.var(), a);
        return true;
    }
    if (a.kind() != b.kind()) return false;
    if (a.is_imp())
        return unify_rec(a.premise(), b.premise(), binds) &&
               unify_rec(a.conclusion(), b.conclusion(), binds);
    // Conn
    if (a.symbol() != b.symbol() || a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!unify_rec(a.args()[i], b.args()[i], binds)) return false;
    return true;
}

Formula resolve(const Formula& f, const Bindings& b) {
    const Formula& g = walk(f, b);
    switch (g.kind()) {
        case Formula::Kind::Var:
            return g;
        case Formula::Kind::Imp:
            return Formula::imp(resolve(g.premise(), b), resolve(g.conclusion(), b));
        case Formula::Kind::Conn: {
            std::vector<Formula> args;
            args.reserve(g.args().size());
            for (const auto& a : g.args()) args.push_back(resolve(a, b));
            return Formula::conn(g.symbol(), std::move(args));
        }
    }
    return g;
}

}  // namespace

std::optional<Substitution> mgu(const Formula& a, const Formula& b) {
    Bindings binds;
    if (!unify_rec(a, b, binds)) return std::nullopt;
    Substitution out;
    for (const auto& [v, f] : binds) out.bind(v, resolve(f, binds));
    return out;
}

bool unifiable(const Formula& a, const Formula& b) {
    auto [b2, renaming] = rename_apart(b, vars_of(a));
    return mgu(a, b2).has_value();
}

}  // namespace implic
