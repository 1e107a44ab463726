// Flattening of subgraph conditions to nesting level at most one, and the
// classified conjunctive/disjunctive normal forms built on top of it.

#pragma once

#include <ngc/condition.hpp>

namespace ngc {

// Literals of nesting-free conditions: constants and possibly negated
// one-level Exists with a true body, identified by the codomain.
struct Literal {
    enum class Kind { True, False, Positive, Negative };

    Kind kind = Kind::True;
    std::optional<SubgraphRef> witness; // Positive/Negative codomain
};

bool literal_equal(const Literal& a, const Literal& b);

using Clause = std::vector<Literal>;

enum class NormalForm { Cnf, Dnf };

struct NormalFormCondition {
    SubgraphRef root;
    NormalForm form = NormalForm::Cnf;
    std::vector<Clause> clauses;
};

enum class ClauseKind { Trivial, PurelyPositive, PurelyNegative, Mixed };

struct ClauseClass {
    ClauseKind kind = ClauseKind::Trivial;
    bool truth_value = false;           // Trivial only
    std::optional<SubgraphRef> premise; // PurelyNegative / Mixed: union of negated witnesses
    std::vector<SubgraphRef> disjuncts; // PurelyPositive / Mixed: positive witnesses
};

// Hoists every nested Exists to the top level along b0. The result ranges
// over b0's domain, has nesting level at most one, and is equivalent in the
// subgraph semantics to Exists(b0, c). Core operators only; no
// simplification is applied.
SubCondition flatten(const Inclusion& b0, const SubCondition& c);

// Constant propagation, double-negation elimination, collapse of Exists over
// an identity inclusion, and collapse of Exists with an unsatisfiable body.
// Reaches a fixed point in one pass and preserves subgraph satisfaction.
SubCondition simplify(const SubCondition& c);

// Distribution into clauses with tautology elimination and subsumption
// pruning; literals and clauses come out sorted. Simplifies first and then
// requires nesting level at most one. A constant condition yields the single
// clause [True] or [False].
NormalFormCondition to_cnf(const SubCondition& c);
NormalFormCondition to_dnf(const SubCondition& c);

// A conjunction of positive literals over one root collapses to the single
// positive literal whose witness is the union of all witnesses.
Literal merge_positive_conjunction(const SubgraphRef& root, const std::vector<Literal>& literals);

// Trivial (constant truth value), PurelyPositive (disjunction of Exists),
// PurelyNegative (negated Exists of the union of the witnesses), or Mixed
// (the union of the negated witnesses implies the positive disjunction).
ClauseClass classify_clause(const Clause& clause);

struct NormalizeResult {
    NormalFormCondition nf;
    std::vector<ClauseClass> classes;
};

// desugar, flatten over the identity of the root, convert, classify.
NormalizeResult normalize(const SubCondition& c, NormalForm form = NormalForm::Cnf);

// The normal form spelled back out as a condition over its root.
SubCondition to_condition(const NormalFormCondition& nf);

} // namespace ngc
