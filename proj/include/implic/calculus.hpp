#ifndef IMPLIC_CALCULUS_HPP
#define IMPLIC_CALCULUS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "implic/encode.hpp"
#include "implic/formula.hpp"
#include "implic/tagsys.hpp"

namespace implic {

enum class AxiomGroup { W, T1, T2, H, R1, R2, Builtin };

const char* group_name(AxiomGroup g);

struct Axiom {
    std::string label;
    AxiomGroup group = AxiomGroup::Builtin;
    Formula formula;
};

// Construction data a reduction calculus carries along so that proof
// generators and the closure audit can rebuild codes without re-deriving
// the fresh-variable choices.
struct ReductionInfo {
    TagSystem tag;
    std::string omega;
    Variable base;        // x0 of the encoding
    Variable y, z, u;     // schematic variables of T1/R1/R2
    std::string p0_name;
    std::vector<Axiom> p0_axioms;
};

// A named finite list of labeled axioms. Immutable after construction.
class Calculus {
public:
    Calculus(std::string name, std::vector<Axiom> axioms);

    const std::string& name() const { return name_; }
    const std::vector<Axiom>& axioms() const { return axioms_; }
    const std::set<std::string>& signature() const { return signature_; }

    const Axiom* find(const std::string& label) const;
    const Axiom* find_by_formula(const Formula& f) const;
    // First axiom that is a variant (renaming) of the given pattern.
    const Axiom* find_variant(const Formula& pattern) const;
    bool has_group(AxiomGroup g) const;
    std::size_t count_group(AxiomGroup g) const;

    const std::optional<ReductionInfo>& reduction() const { return reduction_; }
    void attach_reduction(ReductionInfo info) { reduction_ = std::move(info); }

    // File format: "calculus: <name>" then "<label>: <formula>" per line.
    // The group is recovered from the label prefix on load.
    std::string to_text() const;
    static Calculus parse(const std::string& text);
    static Calculus load(const std::string& path);

private:
    std::string name_;
    std::vector<Axiom> axioms_;
    std::set<std::string> signature_;
    std::optional<ReductionInfo> reduction_;
};

// Builtin systems: int_impl {A1, A2}, cl_impl {A1, A2, Peirce}, and the
// Lukasiewicz / Meredith single axioms. Throws InputError on unknown names.
Calculus builtin_calculus(const std::string& name);
bool is_builtin_calculus(const std::string& name);

// The reduction calculus for tag system t, input word omega, and target
// calculus p0. Axiom groups: W (the code of omega), T1/T2 (productions),
// H (short-word hooks into p0), R1/R2 (re-association). The base variable
// and the schematic variables y, z, u are chosen fresh for p0: the first
// names v0, v1, ... not occurring in any p0 axiom.
Calculus build_reduction(const TagSystem& t, const std::string& omega, const Calculus& p0);

// Restriction of a reduction calculus to the given axiom groups. Throws
// InputError if a requested group has no axioms in c.
Calculus subsystem(const Calculus& c, const std::set<AxiomGroup>& groups);

}  // namespace implic

#endif
