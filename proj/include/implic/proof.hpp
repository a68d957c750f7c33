#ifndef IMPLIC_PROOF_HPP
#define IMPLIC_PROOF_HPP

#include <optional>
#include <string>
#include <vector>

#include "implic/calculus.hpp"
#include "implic/formula.hpp"
#include "implic/tagsys.hpp"

namespace implic {

// One derivation line. References always point to earlier lines.
struct ProofStep {
    enum class Kind { Axiom, Hyp, Subst, MP };

    Kind kind;
    std::string label;      // Axiom: axiom label in the calculus
    std::size_t index = 0;  // Hyp: hypothesis index
    std::size_t ref = 0;    // Subst: source line; MP: major premise line
    std::size_t ref2 = 0;   // MP: minor premise line
    Substitution subst;     // Subst only

    static ProofStep axiom(std::string l) { return {Kind::Axiom, std::move(l), 0, 0, 0, {}}; }
    static ProofStep hyp(std::size_t i) { return {Kind::Hyp, {}, i, 0, 0, {}}; }
    static ProofStep subst(std::size_t r, Substitution s) {
        return {Kind::Subst, {}, 0, r, 0, std::move(s)};
    }
    static ProofStep mp(std::size_t major, std::size_t minor) {
        return {Kind::MP, {}, 0, major, minor, {}};
    }
};

struct Proof {
    Calculus calculus;
    std::vector<Formula> hypotheses;
    std::vector<ProofStep> steps;
    std::size_t conclusion = 0;
};

struct Verdict {
    bool valid = false;
    std::size_t step = 0;
    std::string reason;

    static Verdict ok() { return {true, 0, {}}; }
    static Verdict fail(std::size_t s, std::string r) { return {false, s, std::move(r)}; }
    explicit operator bool() const { return valid; }
};

// The kernel. A proof is valid iff every line follows by its rule, the
// substitution rule is never applied to a line whose ancestry contains a
// hypothesis, and the conclusion reference is in range.
Verdict check(const Proof& p);

// Formulas of all lines, or nullopt if the proof is invalid.
std::optional<std::vector<Formula>> evaluate(const Proof& p);
std::optional<Formula> conclusion_formula(const Proof& p);
// Whether the conclusion line depends on any hypothesis (valid proofs only).
bool conclusion_uses_hypothesis(const Proof& p);

// Line-based proof file:
//   proof over <calculus-name>
//   hyp <n>: <formula>
//   <k>: AX <label> | <k>: HYP <n> | <k>: SUB <j> {x:=<formula>; ...} | <k>: MP <j> <i>
//   qed <k>
std::string proof_to_text(const Proof& p);
// The calculus must match the name recorded in the file.
Proof proof_from_text(const std::string& text, const Calculus& calculus);

// Incremental construction with immediate validation; misuse throws
// InputError. The kernel remains the final authority.
class ProofBuilder {
public:
    explicit ProofBuilder(Calculus calculus, std::vector<Formula> hypotheses = {});

    std::size_t axiom(const std::string& label);
    std::size_t hyp(std::size_t index);
    std::size_t subst(std::size_t ref, Substitution s);
    std::size_t mp(std::size_t major, std::size_t minor);
    // Subst line turning the axiom/lemma line `ref` into exactly `target`.
    std::size_t instance_of(std::size_t ref, const Formula& target);
    // Inlines a hypothesis-free proof over the same calculus; returns the
    // line holding its conclusion.
    std::size_t append_proof(const Proof& sub);

    const Formula& at(std::size_t line) const { return formulas_[line]; }
    std::size_t lines() const { return formulas_.size(); }
    const Calculus& calculus() const { return proof_.calculus; }
    Proof finish(std::size_t conclusion) const;

private:
    std::size_t push(ProofStep step, Formula f, bool uses_hyp);
    Proof proof_;
    std::vector<Formula> formulas_;
    std::vector<bool> uses_hyp_;
};

// --- constructive generators -------------------------------------------

// From a hypothesis-free proof of A, a proof of B -> A (requires an A1-shaped
// axiom in the calculus).
Proof weaken(const Proof& p, const Formula& b);

// Deduction theorem as a proof transformer: from a proof of B under
// hypotheses G + [A], a proof of A -> B under G. The input may use Subst
// only on axiom lines (pre-instantiated schemes); requires A1 and A2.
Proof deduction_elaborate(const Proof& p);

// Hypothesis-free proof of x -> ((x -> y) -> y) in calc, built by
// elaborating x, x -> y |- y twice.
Proof lemma_vee_intro_left(const Calculus& calc);

// Proof of an alphabetic formula in int_impl: letter codes by weakening,
// vees by an A1 instance against the right branch.
Proof prove_alphabetic(const Formula& a);

// Lemma-6 shape shift: from the hypothesis (guard -> (bwd(xi) v fwd(beta)) v
// fwd(zeta)), derives (guard -> bwd(xi beta) v fwd(zeta)) by |beta|-1
// applications of R1.
Proof shift_assoc(const std::string& xi, const std::string& beta, const std::string& zeta,
                  const Calculus& pT);

// Corollary-8 merge: from (guard -> fwd(xi) v fwd(zeta)) derives
// (guard -> fwd(xi zeta)); R1 phase then R2 phase.
Proof merge_code(const std::string& xi, const std::string& zeta, const Calculus& pT);

// Lemma 9 / Corollary 10: hypothesis-free proof of the code of the trace's
// last word, starting from the W axiom and simulating every production.
Proof simulate_trace(const TagTrace& trace, const Calculus& pTomega);

// The forward direction of the reduction: for a halted trace, one
// hypothesis-free proof of each p0 axiom via the matching H axiom.
std::vector<Proof> halting_completion(const TagTrace& trace, const Calculus& full);

// Witness for the inclusion P_{T,omega} <= int_impl: a proof in int_impl of
// a W/T1/T2/R1/R2 axiom. The axiom's conclusion body is derived leafwise
// (letter codes and vees with at least one derivable branch), then weakened
// under the guard and the antecedent.
Proof prove_reduction_axiom_in_int(const Formula& axiom, const Variable& base);

}  // namespace implic

#endif
