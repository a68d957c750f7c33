#ifndef IMPLIC_UNIFY_HPP
#define IMPLIC_UNIFY_HPP

#include <optional>
#include <set>
#include <utility>

#include "implic/formula.hpp"

namespace implic {

// Returns a variant of f whose variables are disjoint from `forbidden`,
// together with the renaming used. The renaming is a bijection on vars_of(f);
// variables not in `forbidden` are kept.
std::pair<Formula, Substitution> rename_apart(const Formula& f,
                                              const std::set<Variable>& forbidden);

// Robinson unification with occurs check. Shared variables are shared:
// mgu(x -> x, x -> y) binds y, not a renamed copy. The returned substitution
// is idempotent.
std::optional<Substitution> mgu(const Formula& a, const Formula& b);

// The instance-intersection notion: a and b are unifiable iff they have a
// common substitution instance, i.e. mgu exists after renaming b apart from a.
bool unifiable(const Formula& a, const Formula& b);

}  // namespace implic

#endif
