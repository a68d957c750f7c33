#include "implic/proof.hpp"

#include <fstream>
#include <sstream>

namespace implic {

// ---------- kernel ----------

namespace {

struct Line {
    Formula formula;
    bool uses_hyp;
};

// Computes the formula of each line, failing on the first broken rule.
Verdict run_kernel(const Proof& p, std::vector<Line>* out) {
    std::vector<Line> lines;
    lines.reserve(p.steps.size());
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
        const ProofStep& st = p.steps[k];
        switch (st.kind) {
            case ProofStep::Kind::Axiom: {
                const Axiom* ax = p.calculus.find(st.label);
                if (!ax) return Verdict::fail(k, "unknown axiom label '" + st.label + "'");
                lines.push_back({ax->formula, false});
                break;
            }
            case ProofStep::Kind::Hyp: {
                if (st.index >= p.hypotheses.size())
                    return Verdict::fail(k, "hypothesis index out of range");
                lines.push_back({p.hypotheses[st.index], true});
                break;
            }
            case ProofStep::Kind::Subst: {
                if (st.ref >= k) return Verdict::fail(k, "forward reference");
                if (lines[st.ref].uses_hyp)
                    return Verdict::fail(k, "subst-on-hypothesis");
                lines.push_back({apply_subst(st.subst, lines[st.ref].formula), false});
                break;
            }
            case ProofStep::Kind::MP: {
                if (st.ref >= k || st.ref2 >= k)
                    return Verdict::fail(k, "forward reference");
                const Formula& major = lines[st.ref].formula;
                if (!major.is_imp()) return Verdict::fail(k, "major premise is not an implication");
                if (major.premise() != lines[st.ref2].formula)
                    return Verdict::fail(k, "premise-mismatch");
                lines.push_back(
                    {major.conclusion(), lines[st.ref].uses_hyp || lines[st.ref2].uses_hyp});
                break;
            }
        }
    }
    if (p.conclusion >= p.steps.size())
        return Verdict::fail(p.conclusion, "conclusion out of range");
    if (out) *out = std::move(lines);
    return Verdict::ok();
}

}  // namespace

Verdict check(const Proof& p) { return run_kernel(p, nullptr); }

std::optional<std::vector<Formula>> evaluate(const Proof& p) {
    std::vector<Line> lines;
    if (!run_kernel(p, &lines)) return std::nullopt;
    std::vector<Formula> out;
    out.reserve(lines.size());
    for (auto& l : lines) out.push_back(std::move(l.formula));
    return out;
}

std::optional<Formula> conclusion_formula(const Proof& p) {
    auto lines = evaluate(p);
    if (!lines) return std::nullopt;
    return (*lines)[p.conclusion];
}

bool conclusion_uses_hypothesis(const Proof& p) {
    std::vector<Line> lines;
    if (!run_kernel(p, &lines)) throw InputError("invalid proof");
    return lines[p.conclusion].uses_hyp;
}

// ---------- serialization ----------

namespace {

std::string subst_to_text(const Substitution& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [v, f] : s.bindings()) {
        if (!first) out << "; ";
        first = false;
        out << v.name << ":=" << to_string(f);
    }
    out << '}';
    return out.str();
}

Substitution subst_from_text(const std::string& text) {
    auto open = text.find('{');
    auto close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw InputError("bad substitution syntax: " + text);
    std::string inner = text.substr(open + 1, close - open - 1);
    Substitution s;
    std::size_t pos = 0;
    while (pos < inner.size()) {
        auto semi = inner.find(';', pos);
        std::string item = inner.substr(pos, semi == std::string::npos ? semi : semi - pos);
        pos = semi == std::string::npos ? inner.size() : semi + 1;
        auto assign = item.find(":=");
        if (assign == std::string::npos) {
            if (item.find_first_not_of(' ') == std::string::npos) continue;
            throw InputError("bad binding: " + item);
        }
        std::string name = item.substr(0, assign);
        auto b = name.find_first_not_of(' ');
        auto e = name.find_last_not_of(' ');
        name = name.substr(b, e - b + 1);
        s.bind(Variable(name), parse_formula(item.substr(assign + 2)));
    }
    return s;
}

}  // namespace

std::string proof_to_text(const Proof& p) {
    std::ostringstream out;
    out << "proof over " << p.calculus.name() << "\n";
    for (std::size_t i = 0; i < p.hypotheses.size(); ++i)
        out << "hyp " << i << ": " << to_string(p.hypotheses[i]) << "\n";
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
        const ProofStep& st = p.steps[k];
        out << k << ": ";
        switch (st.kind) {
            case ProofStep::Kind::Axiom: out << "AX " << st.label; break;
            case ProofStep::Kind::Hyp: out << "HYP " << st.index; break;
            case ProofStep::Kind::Subst:
                out << "SUB " << st.ref << ' ' << subst_to_text(st.subst);
                break;
            case ProofStep::Kind::MP: out << "MP " << st.ref << ' ' << st.ref2; break;
        }
        out << "\n";
    }
    out << "qed " << p.conclusion << "\n";
    return out.str();
}

Proof proof_from_text(const std::string& text, const Calculus& calculus) {
    std::istringstream in(text);
    std::string line;
    Proof p{calculus, {}, {}, 0};
    bool have_header = false, have_qed = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            if (line.rfind("proof over ", 0) != 0)
                throw InputError("expected 'proof over <calculus>' header");
            std::string name = line.substr(11);
            if (name != calculus.name())
                throw InputError("proof is over calculus '" + name + "', got '" +
                                 calculus.name() + "'");
            have_header = true;
            continue;
        }
        if (line.rfind("hyp ", 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos) throw InputError("bad hyp line: " + line);
            std::size_t idx = std::stoul(line.substr(4, colon - 4));
            if (idx != p.hypotheses.size()) throw InputError("hypotheses out of order");
            p.hypotheses.push_back(parse_formula(line.substr(colon + 1)));
            continue;
        }
        if (line.rfind("qed ", 0) == 0) {
            p.conclusion = std::stoul(line.substr(4));
            have_qed = true;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw InputError("bad proof line: " + line);
        std::size_t idx = std::stoul(line.substr(0, colon));
        if (idx != p.steps.size()) throw InputError("steps out of order at line: " + line);
        std::istringstream ls(line.substr(colon + 1));
        std::string op;
        ls >> op;
        if (op == "AX") {
            std::string label;
            ls >> label;
            p.steps.push_back(ProofStep::axiom(label));
        } else if (op == "HYP") {
            std::size_t i;
            ls >> i;
            p.steps.push_back(ProofStep::hyp(i));
        } else if (op == "SUB") {
            std::size_t r;
            ls >> r;
            std::string rest;
            std::getline(ls, rest);
            p.steps.push_back(ProofStep::subst(r, subst_from_text(rest)));
        } else if (op == "MP") {
            std::size_t a, b;
            ls >> a >> b;
            p.steps.push_back(ProofStep::mp(a, b));
        } else {
            throw InputError("unknown proof op: " + op);
        }
    }
    if (!have_header || !have_qed) throw InputError("truncated proof file");
    return p;
}

// ---------- builder ----------

ProofBuilder::ProofBuilder(Calculus calculus, std::vector<Formula> hypotheses)
    : proof_{std::move(calculus), std::move(hypotheses), {}, 0} {}

std::size_t ProofBuilder::push(ProofStep step, Formula f, bool uses_hyp) {
    proof_.steps.push_back(std::move(step));
    formulas_.push_back(std::move(f));
    uses_hyp_.push_back(uses_hyp);
    return formulas_.size() - 1;
}

std::size_t ProofBuilder::axiom(const std::string& label) {
    const Axiom* ax = proof_.calculus.find(label);
    if (!ax) throw InputError("unknown axiom label '" + label + "'");
    return push(ProofStep::axiom(label), ax->formula, false);
}

std::size_t ProofBuilder::hyp(std::size_t index) {
    if (index >= proof_.hypotheses.size()) throw InputError("hypothesis index out of range");
    return push(ProofStep::hyp(index), proof_.hypotheses[index], true);
}

std::size_t ProofBuilder::subst(std::size_t ref, Substitution s) {
    if (ref >= formulas_.size()) throw InputError("subst reference out of range");
    if (uses_hyp_[ref]) throw InputError("substitution into a hypothesis-dependent line");
    Formula f = apply_subst(s, formulas_[ref]);
    return push(ProofStep::subst(ref, std::move(s)), std::move(f), false);
}

std::size_t ProofBuilder::mp(std::size_t major, std::size_t minor) {
    if (major >= formulas_.size() || minor >= formulas_.size())
        throw InputError("mp reference out of range");
    const Formula& mf = formulas_[major];
    if (!mf.is_imp() || mf.premise() != formulas_[minor])
        throw InputError("modus ponens premise mismatch");
    return push(ProofStep::mp(major, minor), mf.conclusion(),
                uses_hyp_[major] || uses_hyp_[minor]);
}

std::size_t ProofBuilder::instance_of(std::size_t ref, const Formula& target) {
    if (ref >= formulas_.size()) throw InputError("reference out of range");
    auto s = match_instance(formulas_[ref], target);
    if (!s) throw InputError("line is not a generalization of the requested instance");
    return subst(ref, std::move(*s));
}

std::size_t ProofBuilder::append_proof(const Proof& sub) {
    if (!sub.hypotheses.empty()) throw InputError("cannot inline a proof with hypotheses");
    if (sub.calculus.name() != proof_.calculus.name())
        throw InputError("cannot inline a proof over a different calculus");
    const std::size_t offset = formulas_.size();
    auto lines = evaluate(sub);
    if (!lines) throw InputError("cannot inline an invalid proof");
    for (std::size_t k = 0; k < sub.steps.size(); ++k) {
        ProofStep st = sub.steps[k];
        if (st.kind == ProofStep::Kind::Subst) st.ref += offset;
        if (st.kind == ProofStep::Kind::MP) {
            st.ref += offset;
            st.ref2 += offset;
        }
        push(std::move(st), (*lines)[k], false);
    }
    return offset + sub.conclusion;
}

Proof ProofBuilder::finish(std::size_t conclusion) const {
    if (conclusion >= formulas_.size()) throw InputError("conclusion out of range");
    Proof p = proof_;
    p.conclusion = conclusion;
    return p;
}

// ---------- generators ----------

namespace {

const Formula& a1_pattern() {
    static const Formula f = parse_formula("x -> (y -> x)");
    return f;
}
const Formula& a2_pattern() {
    static const Formula f = parse_formula("(x -> (y -> z)) -> ((x -> y) -> (x -> z))");
    return f;
}

std::string require_axiom_variant(const Calculus& c, const Formula& pattern,
                                  const char* what) {
    const Axiom* ax = c.find_variant(pattern);
    if (!ax) throw InputError(std::string("calculus '") + c.name() + "' lacks " + what);
    return ax->label;
}

}  // namespace

Proof weaken(const Proof& p, const Formula& b) {
    auto concl = conclusion_formula(p);
    if (!concl) throw InputError("weaken: input proof is invalid");
    if (!p.hypotheses.empty()) throw InputError("weaken: input proof has hypotheses");
    std::string a1 = require_axiom_variant(p.calculus, a1_pattern(), "an A1-shaped axiom");

    ProofBuilder bld(p.calculus);
    std::size_t base = bld.append_proof(p);
    std::size_t ax = bld.axiom(a1);
    std::size_t inst = bld.instance_of(ax, Formula::imp(*concl, Formula::imp(b, *concl)));
    return bld.finish(bld.mp(inst, base));
}

Proof deduction_elaborate(const Proof& p) {
    auto lines = evaluate(p);
    if (!lines) throw InputError("deduction_elaborate: input proof is invalid");
    if (p.hypotheses.empty()) throw InputError("deduction_elaborate: no hypothesis to discharge");
    for (const auto& st : p.steps)
        if (st.kind == ProofStep::Kind::Subst &&
            p.steps[st.ref].kind != ProofStep::Kind::Axiom)
            throw InputError("deduction_elaborate: substitution on a non-axiom line");

    const Formula discharged = p.hypotheses.back();
    const std::size_t last_hyp = p.hypotheses.size() - 1;
    std::string a1 = require_axiom_variant(p.calculus, a1_pattern(), "an A1-shaped axiom");
    std::string a2 = require_axiom_variant(p.calculus, a2_pattern(), "an A2-shaped axiom");

    ProofBuilder bld(p.calculus,
                     std::vector<Formula>(p.hypotheses.begin(), p.hypotheses.end() - 1));
    std::optional<std::size_t> a1_line, a2_line, self_line;
    auto a1_at = [&] {
        if (!a1_line) a1_line = bld.axiom(a1);
        return *a1_line;
    };
    auto a2_at = [&] {
        if (!a2_line) a2_line = bld.axiom(a2);
        return *a2_line;
    };
    const Formula& A = discharged;
    auto imp = [](const Formula& x, const Formula& y) { return Formula::imp(x, y); };

    // A -> A, emitted once on demand.
    auto self = [&] {
        if (self_line) return *self_line;
        Formula AA = imp(A, A);
        std::size_t s1 = bld.instance_of(
            a2_at(), imp(imp(A, imp(AA, A)), imp(imp(A, AA), AA)));
        std::size_t s2 = bld.instance_of(a1_at(), imp(A, imp(AA, A)));
        std::size_t m1 = bld.mp(s1, s2);
        std::size_t s3 = bld.instance_of(a1_at(), imp(A, AA));
        self_line = bld.mp(m1, s3);
        return *self_line;
    };
    // Turns a line proving F into one proving A -> F.
    auto lift = [&](std::size_t line) {
        const Formula& f = bld.at(line);
        std::size_t inst = bld.instance_of(a1_at(), imp(f, imp(A, f)));
        return bld.mp(inst, line);
    };

    std::vector<std::size_t> out(p.steps.size());
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
        const ProofStep& st = p.steps[k];
        switch (st.kind) {
            case ProofStep::Kind::Hyp:
                out[k] = st.index == last_hyp ? self() : lift(bld.hyp(st.index));
                break;
            case ProofStep::Kind::Axiom:
                out[k] = lift(bld.axiom(st.label));
                break;
            case ProofStep::Kind::Subst: {
                std::size_t ax = bld.axiom(p.steps[st.ref].label);
                out[k] = lift(bld.subst(ax, st.subst));
                break;
            }
            case ProofStep::Kind::MP: {
                const Formula& minor = (*lines)[st.ref2];
                const Formula& concl = (*lines)[k];
                std::size_t inst = bld.instance_of(
                    a2_at(), imp(imp(A, imp(minor, concl)),
                                 imp(imp(A, minor), imp(A, concl))));
                std::size_t m1 = bld.mp(inst, out[st.ref]);
                out[k] = bld.mp(m1, out[st.ref2]);
                break;
            }
        }
    }
    return bld.finish(out[p.conclusion]);
}

Proof lemma_vee_intro_left(const Calculus& calc) {
    // x, x -> y |- y, elaborated twice.
    Formula x = Formula::var("x"), y = Formula::var("y");
    ProofBuilder bld(calc, {x, Formula::imp(x, y)});
    std::size_t hx = bld.hyp(0);
    std::size_t hxy = bld.hyp(1);
    Proof inner = bld.finish(bld.mp(hxy, hx));
    return deduction_elaborate(deduction_elaborate(inner));
}

namespace {

// Shared emitter for alphabetic formulas; dedups repeated subformulas.
struct AlphabeticEmitter {
    ProofBuilder& bld;
    const Variable& base;
    std::string a1;
    std::optional<std::size_t> a1_line;
    std::map<Formula, std::size_t> memo;

    std::size_t a1_at() {
        if (!a1_line) a1_line = bld.axiom(a1);
        return *a1_line;
    }

    std::size_t emit(const Formula& f) {
        if (auto it = memo.find(f); it != memo.end()) return it->second;
        std::size_t line;
        if (auto idx = as_letter_code(f, base)) {
            // Lemma 1: b -> (b -> b) is an A1 instance; weaken by the tower.
            Formula b = Formula::var(base);
            Formula head = Formula::imp(b, Formula::imp(b, b));
            std::size_t head_line = emit_formula_instance(head);
            std::size_t lift = bld.instance_of(a1_at(), Formula::imp(head, f));
            line = bld.mp(lift, head_line);
        } else {
            auto parts = split_vee(f);
            if (!parts) throw InputError("not an alphabetic formula: " + to_string(f));
            std::size_t right = emit(parts->second);
            // Lemma 2: y -> x v y is an A1 instance.
            std::size_t lift = bld.instance_of(a1_at(), Formula::imp(parts->second, f));
            line = bld.mp(lift, right);
        }
        memo.emplace(f, line);
        return line;
    }

    std::size_t emit_formula_instance(const Formula& target) {
        if (auto it = memo.find(target); it != memo.end()) return it->second;
        std::size_t line = bld.instance_of(a1_at(), target);
        memo.emplace(target, line);
        return line;
    }

    static std::optional<std::pair<Formula, Formula>> split_vee(const Formula& f) {
        if (!f.is_imp() || !f.premise().is_imp()) return std::nullopt;
        if (f.premise().conclusion() != f.conclusion()) return std::nullopt;
        return std::make_pair(f.premise().premise(), f.conclusion());
    }
};

}  // namespace

Proof prove_alphabetic(const Formula& a) {
    auto vars = vars_of(a);
    if (vars.size() != 1) throw InputError("not an alphabetic formula: " + to_string(a));
    const Variable base = *vars.begin();
    if (!is_alphabetic(a, base))
        throw InputError("not an alphabetic formula: " + to_string(a));

    Calculus calc = builtin_calculus("int_impl");
    ProofBuilder bld(calc);
    AlphabeticEmitter em{bld, base, "A1", std::nullopt, {}};
    return bld.finish(em.emit(a));
}

// ---------- reduction-calculus derivations ----------

namespace {

const ReductionInfo& require_reduction(const Calculus& c) {
    if (!c.reduction())
        throw InputError("calculus '" + c.name() + "' carries no reduction construction");
    return *c.reduction();
}

struct CodeOps {
    const ReductionInfo& info;
    Alphabet alpha;
    Formula guard;

    explicit CodeOps(const ReductionInfo& i)
        : info(i), alpha(i.tag), guard(triangle(i.base)) {}

    Formula fwd(const std::string& w) const {
        return nest(alpha, w, Direction::Forward, info.base);
    }
    Formula bwd(const std::string& w) const {
        return nest(alpha, w, Direction::Backward, info.base);
    }
    Formula guarded(Formula body) const { return Formula::imp(guard, std::move(body)); }
};

std::size_t axiom_line_for(ProofBuilder& bld, const Calculus& c, const Formula& f,
                           const char* what) {
    const Axiom* ax = c.find_by_formula(f);
    if (!ax) throw InputError(std::string("calculus lacks the required ") + what + " axiom");
    return bld.axiom(ax->label);
}

// R1 loop of Lemma 6: rewrites (guard -> (bwd(grown) v fwd(rest)) v tail)
// until rest is a single letter. Returns the final line.
std::size_t emit_shift_loop(ProofBuilder& bld, const Calculus& c, const CodeOps& ops,
                            std::size_t cur, std::string grown, std::string rest,
                            const Formula& tail) {
    while (rest.size() >= 2) {
        char a = rest[0];
        std::string delta = rest.substr(1);
        Formula r1 = Formula::imp(
            ops.guarded(vee(vee(Formula::var(ops.info.y),
                                vee(letter_code(ops.alpha, a, ops.info.base),
                                    Formula::var(ops.info.z))),
                            Formula::var(ops.info.u))),
            ops.guarded(vee(vee(vee(Formula::var(ops.info.y),
                                    letter_code(ops.alpha, a, ops.info.base)),
                                Formula::var(ops.info.z)),
                            Formula::var(ops.info.u))));
        std::size_t ax = axiom_line_for(bld, c, r1, "R1");
        Formula instance = Formula::imp(
            ops.guarded(vee(vee(ops.bwd(grown), ops.fwd(rest)), tail)),
            ops.guarded(vee(vee(ops.bwd(grown + a), ops.fwd(delta)), tail)));
        std::size_t inst = bld.instance_of(ax, instance);
        cur = bld.mp(inst, cur);
        grown += a;
        rest = delta;
    }
    return cur;
}

// R2 loop of Lemma 7: rewrites (guard -> bwd(xi) v fwd(zeta)) down to
// (guard -> fwd(xi zeta)).
std::size_t emit_merge_r2_loop(ProofBuilder& bld, const Calculus& c, const CodeOps& ops,
                               std::size_t cur, std::string xi, std::string zeta) {
    while (xi.size() >= 2) {
        char a = xi.back();
        std::string front = xi.substr(0, xi.size() - 1);
        Formula r2 = Formula::imp(
            ops.guarded(vee(vee(Formula::var(ops.info.y),
                                letter_code(ops.alpha, a, ops.info.base)),
                            Formula::var(ops.info.z))),
            ops.guarded(vee(Formula::var(ops.info.y),
                            vee(letter_code(ops.alpha, a, ops.info.base),
                                Formula::var(ops.info.z)))));
        std::size_t ax = axiom_line_for(bld, c, r2, "R2");
        Formula instance =
            Formula::imp(ops.guarded(vee(ops.bwd(xi), ops.fwd(zeta))),
                         ops.guarded(vee(ops.bwd(front), ops.fwd(a + zeta))));
        std::size_t inst = bld.instance_of(ax, instance);
        cur = bld.mp(inst, cur);
        xi = front;
        zeta = a + zeta;
    }
    return cur;
}

// Corollary 8 on an existing line (guard -> fwd(xi) v fwd(zeta)).
std::size_t emit_merge(ProofBuilder& bld, const Calculus& c, const CodeOps& ops,
                       std::size_t cur, const std::string& xi, const std::string& zeta) {
    if (xi.size() >= 2)
        cur = emit_shift_loop(bld, c, ops, cur, xi.substr(0, 1), xi.substr(1),
                              ops.fwd(zeta));
    return emit_merge_r2_loop(bld, c, ops, cur, xi, zeta);
}

// Lemma 9 / Corollary 10 engine: W axiom, then one T1/T2 round per trace
// production.
std::size_t emit_trace_derivation(ProofBuilder& bld, const TagTrace& trace,
                                  const Calculus& c, const CodeOps& ops) {
    const TagSystem& t = ops.info.tag;
    if (trace.words.empty()) throw InputError("empty trace");
    if (trace.words.front() != ops.info.omega)
        throw InputError("trace does not start at the calculus input word");

    std::size_t cur = axiom_line_for(bld, c, ops.guarded(ops.fwd(ops.info.omega)), "W");
    for (std::size_t j = 0; j + 1 < trace.words.size(); ++j) {
        const std::string& w = trace.words[j];
        const std::string& next = trace.words[j + 1];
        auto expect = step(t, w);
        if (!expect || *expect != next)
            throw InputError("trace word " + std::to_string(j + 1) +
                             " is not a production of its predecessor");
        const std::string& prod = t.production(w[0]);
        std::string gamma = w.substr(static_cast<std::size_t>(t.deletion));
        if (gamma.empty()) {
            // Lemma 9, |beta| = 0: the T2 axiom applies verbatim.
            Formula t2 = Formula::imp(ops.guarded(ops.fwd(w)), ops.guarded(ops.fwd(prod)));
            std::size_t ax = axiom_line_for(bld, c, t2, "T2");
            cur = bld.mp(ax, cur);
        } else {
            // Lemma 9, |beta| > 0: T1 with y := fwd(gamma), then Corollary 8.
            std::vector<Formula> lhs{letter_code(ops.alpha, w[0], ops.info.base)};
            for (std::size_t q = 1; q < static_cast<std::size_t>(t.deletion); ++q)
                lhs.push_back(letter_code(ops.alpha, w[q], ops.info.base));
            lhs.push_back(Formula::var(ops.info.y));
            std::vector<Formula> rhs{Formula::var(ops.info.y)};
            for (char ch : prod) rhs.push_back(letter_code(ops.alpha, ch, ops.info.base));
            Formula t1 = Formula::imp(ops.guarded(vee_chain(lhs, Direction::Forward)),
                                      ops.guarded(vee_chain(rhs, Direction::Forward)));
            std::size_t ax = axiom_line_for(bld, c, t1, "T1");
            Formula instance =
                Formula::imp(ops.guarded(ops.fwd(w)),
                             ops.guarded(vee(ops.fwd(gamma), ops.fwd(prod))));
            std::size_t inst = bld.instance_of(ax, instance);
            cur = bld.mp(inst, cur);
            cur = emit_merge(bld, c, ops, cur, gamma, prod);
        }
        if (bld.at(cur) != ops.guarded(ops.fwd(next)))
            throw InputError("trace derivation drifted from the expected code");
    }
    return cur;
}

}  // namespace

Proof shift_assoc(const std::string& xi, const std::string& beta, const std::string& zeta,
                  const Calculus& pT) {
    if (xi.empty() || beta.empty() || zeta.empty())
        throw InputError("shift_assoc requires nonempty words");
    const ReductionInfo& info = require_reduction(pT);
    CodeOps ops(info);
    Formula hyp_f = ops.guarded(vee(vee(ops.bwd(xi), ops.fwd(beta)), ops.fwd(zeta)));
    ProofBuilder bld(pT, {hyp_f});
    std::size_t cur = bld.hyp(0);
    cur = emit_shift_loop(bld, pT, ops, cur, xi, beta, ops.fwd(zeta));
    return bld.finish(cur);
}

Proof merge_code(const std::string& xi, const std::string& zeta, const Calculus& pT) {
    if (xi.empty() || zeta.empty()) throw InputError("merge_code requires nonempty words");
    const ReductionInfo& info = require_reduction(pT);
    CodeOps ops(info);
    Formula hyp_f = ops.guarded(vee(ops.fwd(xi), ops.fwd(zeta)));
    ProofBuilder bld(pT, {hyp_f});
    std::size_t cur = bld.hyp(0);
    cur = emit_merge(bld, pT, ops, cur, xi, zeta);
    return bld.finish(cur);
}

Proof simulate_trace(const TagTrace& trace, const Calculus& pTomega) {
    const ReductionInfo& info = require_reduction(pTomega);
    CodeOps ops(info);
    ProofBuilder bld(pTomega);
    return bld.finish(emit_trace_derivation(bld, trace, pTomega, ops));
}

std::vector<Proof> halting_completion(const TagTrace& trace, const Calculus& full) {
    if (!trace.halted) throw InputError("halting_completion requires a halted trace");
    const ReductionInfo& info = require_reduction(full);
    CodeOps ops(info);
    const std::string& final_word = trace.last();
    if (final_word.empty() ||
        static_cast<long>(final_word.size()) >= info.tag.deletion)
        throw InputError("halted trace must end in a nonempty word shorter than d");

    std::vector<Proof> proofs;
    for (const Axiom& ax : info.p0_axioms) {
        ProofBuilder bld(full);
        std::size_t code_line = emit_trace_derivation(bld, trace, full, ops);
        Formula h = Formula::imp(ops.guarded(ops.fwd(final_word)), ax.formula);
        std::size_t h_line = axiom_line_for(bld, full, h, "H");
        proofs.push_back(bld.finish(bld.mp(h_line, code_line)));
    }
    return proofs;
}

// ---------- inclusion witnesses ----------

namespace {

// Derives a body built from letter codes and vees where at least one branch
// of every vee is derivable. Returns nullopt for non-derivable shapes.
std::optional<std::size_t> emit_derivable_body(ProofBuilder& bld, const Formula& f,
                                               const Variable& base,
                                               std::optional<std::size_t>& lemma_line,
                                               AlphabeticEmitter& em) {
    if (as_letter_code(f, base)) return em.emit(f);
    auto parts = AlphabeticEmitter::split_vee(f);
    if (!parts) return std::nullopt;
    if (auto right = emit_derivable_body(bld, parts->second, base, lemma_line, em)) {
        std::size_t lift = bld.instance_of(em.a1_at(), Formula::imp(parts->second, f));
        return bld.mp(lift, *right);
    }
    if (auto left = emit_derivable_body(bld, parts->first, base, lemma_line, em)) {
        // x -> x v y, instantiated by substitution.
        if (!lemma_line)
            lemma_line = bld.append_proof(lemma_vee_intro_left(bld.calculus()));
        std::size_t inst = bld.instance_of(*lemma_line, Formula::imp(parts->first, f));
        return bld.mp(inst, *left);
    }
    return std::nullopt;
}

}  // namespace

Proof prove_reduction_axiom_in_int(const Formula& axiom, const Variable& base) {
    Calculus calc = builtin_calculus("int_impl");
    const Formula guard = triangle(base);

    // Shape: guard -> body, or antecedent -> (guard -> body).
    Formula body = axiom;
    std::vector<Formula> prefixes;
    if (axiom.is_imp() && axiom.premise() == guard) {
        prefixes.push_back(guard);
        body = axiom.conclusion();
    } else if (axiom.is_imp() && axiom.conclusion().is_imp() &&
               axiom.conclusion().premise() == guard) {
        prefixes.push_back(axiom.premise());
        prefixes.push_back(guard);
        body = axiom.conclusion().conclusion();
    } else {
        throw InputError("not a reduction-calculus axiom shape: " + to_string(axiom));
    }

    ProofBuilder bld(calc);
    AlphabeticEmitter em{bld, base, "A1", std::nullopt, {}};
    std::optional<std::size_t> lemma_line;
    auto line = emit_derivable_body(bld, body, base, lemma_line, em);
    if (!line) throw InputError("axiom body is not derivable by the weakening scheme");

    // Weaken under the guard, then under the antecedent.
    std::size_t cur = *line;
    Formula cur_f = body;
    for (auto it = prefixes.rbegin(); it != prefixes.rend(); ++it) {
        Formula target = Formula::imp(*it, cur_f);
        std::size_t lift = bld.instance_of(em.a1_at(), Formula::imp(cur_f, target));
        cur = bld.mp(lift, cur);
        cur_f = target;
    }
    return bld.finish(cur);
}

}  // namespace implic
