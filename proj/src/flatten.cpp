#include <ngc/flatten.hpp>

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <utility>

namespace ngc {

namespace {

SubCondition flat_true(const Inclusion& b0) {
    return make_exists(b0, make_true(b0.codomain));
}

SubCondition flat_false(const Inclusion& b0) {
    return make_exists(b0, make_not(make_true(b0.codomain)));
}

SubCondition flatten_pos(const Inclusion& b0, const SubCondition& c);

SubCondition flatten_neg(const Inclusion& b0, const SubCondition& d) {
    switch (d.op) {
    case CondOp::True:
        return flat_false(b0);
    case CondOp::Not:
        return flatten_pos(b0, d.children.front());
    case CondOp::And: {
        if (d.children.empty())
            return flat_false(b0);
        std::vector<SubCondition> kids;
        kids.reserve(d.children.size());
        for (const auto& e : d.children)
            kids.push_back(flatten_neg(b0, e));
        return make_or(b0.domain, std::move(kids));
    }
    case CondOp::Or: {
        if (d.children.empty())
            return flat_true(b0);
        std::vector<SubCondition> kids;
        kids.reserve(d.children.size());
        for (const auto& e : d.children)
            kids.push_back(flatten_neg(b0, e));
        return make_and(b0.domain, std::move(kids));
    }
    case CondOp::Exists: {
        // Negation splits: the context must occur, and the extension must
        // fail underneath it.
        std::vector<SubCondition> kids;
        kids.push_back(flat_true(b0));
        kids.push_back(make_not(flatten_pos(compose(b0, *d.morphism), d.children.front())));
        return make_and(b0.domain, std::move(kids));
    }
    default:
        throw std::invalid_argument("flatten: condition must use core operators only");
    }
}

SubCondition flatten_pos(const Inclusion& b0, const SubCondition& c) {
    switch (c.op) {
    case CondOp::True:
        return flat_true(b0);
    case CondOp::And: {
        if (c.children.empty())
            return flat_true(b0);
        std::vector<SubCondition> kids;
        kids.reserve(c.children.size());
        for (const auto& d : c.children)
            kids.push_back(flatten_pos(b0, d));
        return make_and(b0.domain, std::move(kids));
    }
    case CondOp::Or: {
        if (c.children.empty())
            return flat_false(b0);
        std::vector<SubCondition> kids;
        kids.reserve(c.children.size());
        for (const auto& d : c.children)
            kids.push_back(flatten_pos(b0, d));
        return make_or(b0.domain, std::move(kids));
    }
    case CondOp::Exists:
        // Composing the steps hoists the inner quantifier.
        return flatten_pos(compose(b0, *c.morphism), c.children.front());
    case CondOp::Not:
        return flatten_neg(b0, c.children.front());
    default:
        throw std::invalid_argument("flatten: condition must use core operators only");
    }
}

bool is_false_node(const SubCondition& c) {
    return c.op == CondOp::Not && c.children.front().op == CondOp::True;
}

} // namespace

SubCondition flatten(const Inclusion& b0, const SubCondition& c) {
    if (!object_equal(b0.codomain, c.root))
        throw std::invalid_argument("flatten: inclusion codomain differs from the condition's root");
    return flatten_pos(b0, c);
}

SubCondition simplify(const SubCondition& c) {
    switch (c.op) {
    case CondOp::True:
        return c;
    case CondOp::Not: {
        SubCondition body = simplify(c.children.front());
        if (body.op == CondOp::Not)
            return std::move(body.children.front());
        return make_not(std::move(body));
    }
    case CondOp::And: {
        std::vector<SubCondition> kids;
        for (const auto& d : c.children) {
            SubCondition s = simplify(d);
            if (s.op == CondOp::True)
                continue;
            if (is_false_node(s))
                return make_not(make_true(c.root));
            kids.push_back(std::move(s));
        }
        if (kids.empty())
            return make_true(c.root);
        if (kids.size() == 1)
            return std::move(kids.front());
        return make_and(c.root, std::move(kids));
    }
    case CondOp::Or: {
        std::vector<SubCondition> kids;
        for (const auto& d : c.children) {
            SubCondition s = simplify(d);
            if (is_false_node(s))
                continue;
            if (s.op == CondOp::True)
                return make_true(c.root);
            kids.push_back(std::move(s));
        }
        if (kids.empty())
            return make_not(make_true(c.root));
        if (kids.size() == 1)
            return std::move(kids.front());
        return make_or(c.root, std::move(kids));
    }
    case CondOp::Exists: {
        SubCondition body = simplify(c.children.front());
        if (is_false_node(body))
            return make_not(make_true(c.root));
        if (is_identity(*c.morphism))
            return body;
        return make_exists(*c.morphism, std::move(body));
    }
    default:
        throw std::invalid_argument("simplify: condition must use core operators only");
    }
}

bool literal_equal(const Literal& a, const Literal& b) {
    if (a.kind != b.kind)
        return false;
    if (a.witness.has_value() != b.witness.has_value())
        return false;
    return !a.witness || subgraph_equal(*a.witness, *b.witness);
}

namespace {

// Ordering key for literals: kind rank, then codomain ID sets.
struct LitKey {
    int rank = 0; // True 0, False 1, Positive 2, Negative 3
    std::vector<std::string> nodes;
    std::vector<std::string> edges;

    auto operator<=>(const LitKey&) const = default;
};

LitKey key_of(Literal::Kind kind, const SubgraphRef* witness) {
    LitKey k;
    switch (kind) {
    case Literal::Kind::True:
        k.rank = 0;
        break;
    case Literal::Kind::False:
        k.rank = 1;
        break;
    case Literal::Kind::Positive:
        k.rank = 2;
        break;
    case Literal::Kind::Negative:
        k.rank = 3;
        break;
    }
    if (witness) {
        k.nodes = witness->node_ids;
        k.edges = witness->edge_ids;
    }
    return k;
}

LitKey negate(LitKey k) {
    if (k.rank == 2)
        k.rank = 3;
    else if (k.rank == 3)
        k.rank = 2;
    return k;
}

using ClauseSet = std::set<std::set<LitKey>>;

// In clause-set form, the neutral element of the merging operator is the
// empty set and the absorbing one is the set holding the empty clause.
ClauseSet neutral() { return {}; }
ClauseSet absorbing() { return {{}}; }

bool tautological(const std::set<LitKey>& clause) {
    for (const auto& lit : clause)
        if (lit.rank == 2 && clause.count(negate(lit)))
            return true;
    return false;
}

ClauseSet merge(const ClauseSet& a, const ClauseSet& b) {
    ClauseSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

ClauseSet distribute(const ClauseSet& a, const ClauseSet& b) {
    ClauseSet out;
    for (const auto& ca : a) {
        for (const auto& cb : b) {
            std::set<LitKey> merged = ca;
            merged.insert(cb.begin(), cb.end());
            if (!tautological(merged))
                out.insert(std::move(merged));
        }
    }
    return out;
}

// Collects the clause set of c (CNF) or the term set of c (DNF); the two
// forms are dual, differing only in which operator merges and which
// distributes and in the encoding of the constants.
ClauseSet collect(const SubCondition& c, bool negated, NormalForm form) {
    bool conjunctive_merges = form == NormalForm::Cnf;
    switch (c.op) {
    case CondOp::True:
        return negated == conjunctive_merges ? absorbing() : neutral();
    case CondOp::Not:
        return collect(c.children.front(), !negated, form);
    case CondOp::And:
    case CondOp::Or: {
        bool conjunction = (c.op == CondOp::And) != negated;
        bool merging = conjunction == conjunctive_merges;
        // The identity of merge is the empty set; the identity of distribute
        // is the set holding the empty clause.
        ClauseSet acc = merging ? neutral() : absorbing();
        for (const auto& child : c.children) {
            ClauseSet cs = collect(child, negated, form);
            acc = merging ? merge(acc, cs) : distribute(acc, cs);
        }
        return acc;
    }
    case CondOp::Exists: {
        if (c.children.front().op != CondOp::True)
            throw std::invalid_argument("normal form conversion: nesting level exceeds one");
        Literal::Kind kind = negated ? Literal::Kind::Negative : Literal::Kind::Positive;
        const SubgraphRef& witness = morphism_codomain(*c.morphism);
        return ClauseSet{{key_of(kind, &witness)}};
    }
    default:
        throw std::invalid_argument("normal form conversion: condition must use core operators only");
    }
}

void prune_subsumed(ClauseSet& clauses) {
    for (auto it = clauses.begin(); it != clauses.end();) {
        bool subsumed = false;
        for (const auto& other : clauses) {
            if (&other == &*it)
                continue;
            if (other.size() <= it->size() &&
                std::includes(it->begin(), it->end(), other.begin(), other.end())) {
                subsumed = true;
                break;
            }
        }
        it = subsumed ? clauses.erase(it) : std::next(it);
    }
}

Literal from_key(const LitKey& k, const GraphPtr& container) {
    Literal lit;
    switch (k.rank) {
    case 0:
        lit.kind = Literal::Kind::True;
        break;
    case 1:
        lit.kind = Literal::Kind::False;
        break;
    case 2:
        lit.kind = Literal::Kind::Positive;
        break;
    default:
        lit.kind = Literal::Kind::Negative;
        break;
    }
    if (k.rank >= 2)
        lit.witness = SubgraphRef{container, k.nodes, k.edges};
    return lit;
}

NormalFormCondition convert(const SubCondition& c, NormalForm form) {
    SubCondition s = simplify(c);
    ClauseSet clauses = collect(s, false, form);
    prune_subsumed(clauses);

    NormalFormCondition out;
    out.root = c.root;
    out.form = form;
    bool has_empty_clause = !clauses.empty() && clauses.begin()->empty();
    if (clauses.empty() || has_empty_clause) {
        // Only the constants survive as the neutral/absorbing sets: after
        // subsumption an empty clause absorbs every other clause.
        bool is_true = (form == NormalForm::Cnf) ? clauses.empty() : has_empty_clause;
        Literal lit;
        lit.kind = is_true ? Literal::Kind::True : Literal::Kind::False;
        out.clauses.push_back(Clause{lit});
        return out;
    }
    for (const auto& clause : clauses) {
        Clause converted;
        converted.reserve(clause.size());
        for (const auto& k : clause)
            converted.push_back(from_key(k, c.root.container));
        out.clauses.push_back(std::move(converted));
    }
    return out;
}

} // namespace

NormalFormCondition to_cnf(const SubCondition& c) {
    return convert(c, NormalForm::Cnf);
}

NormalFormCondition to_dnf(const SubCondition& c) {
    return convert(c, NormalForm::Dnf);
}

Literal merge_positive_conjunction(const SubgraphRef& root, const std::vector<Literal>& literals) {
    SubgraphRef acc = root;
    for (const auto& lit : literals) {
        if (lit.kind != Literal::Kind::Positive || !lit.witness)
            throw std::invalid_argument("merge_positive_conjunction: literals must be positive");
        acc = join(acc, *lit.witness);
    }
    Literal out;
    out.kind = Literal::Kind::Positive;
    out.witness = std::move(acc);
    return out;
}

ClauseClass classify_clause(const Clause& clause) {
    std::vector<SubgraphRef> pos;
    std::vector<SubgraphRef> neg;
    for (const auto& lit : clause) {
        switch (lit.kind) {
        case Literal::Kind::True: {
            ClauseClass out;
            out.kind = ClauseKind::Trivial;
            out.truth_value = true;
            return out;
        }
        case Literal::Kind::False:
            break;
        case Literal::Kind::Positive:
            pos.push_back(*lit.witness);
            break;
        case Literal::Kind::Negative:
            neg.push_back(*lit.witness);
            break;
        }
    }
    ClauseClass out;
    if (pos.empty() && neg.empty()) {
        out.kind = ClauseKind::Trivial;
        out.truth_value = false;
        return out;
    }
    if (!neg.empty()) {
        SubgraphRef premise = neg.front();
        for (std::size_t i = 1; i < neg.size(); ++i)
            premise = join(premise, neg[i]);
        out.premise = std::move(premise);
    }
    out.disjuncts = std::move(pos);
    out.kind = neg.empty() ? ClauseKind::PurelyPositive
                           : (out.disjuncts.empty() ? ClauseKind::PurelyNegative : ClauseKind::Mixed);
    return out;
}

NormalizeResult normalize(const SubCondition& c, NormalForm form) {
    auto report = validate_condition(c);
    if (!report.ok())
        throw std::invalid_argument("normalize: " + report.violations.front());
    SubCondition flat = flatten(identity_inclusion(c.root), desugar(c));
    NormalizeResult out;
    out.nf = (form == NormalForm::Cnf) ? to_cnf(flat) : to_dnf(flat);
    out.classes.reserve(out.nf.clauses.size());
    for (const auto& clause : out.nf.clauses)
        out.classes.push_back(classify_clause(clause));
    return out;
}

SubCondition to_condition(const NormalFormCondition& nf) {
    auto literal_condition = [&](const Literal& lit) -> SubCondition {
        switch (lit.kind) {
        case Literal::Kind::True:
            return make_true(nf.root);
        case Literal::Kind::False:
            return make_not(make_true(nf.root));
        case Literal::Kind::Positive:
            return make_exists(make_inclusion(nf.root, *lit.witness), make_true(*lit.witness));
        default:
            return make_not(
                make_exists(make_inclusion(nf.root, *lit.witness), make_true(*lit.witness)));
        }
    };
    std::vector<SubCondition> groups;
    groups.reserve(nf.clauses.size());
    for (const auto& clause : nf.clauses) {
        std::vector<SubCondition> lits;
        lits.reserve(clause.size());
        for (const auto& lit : clause)
            lits.push_back(literal_condition(lit));
        groups.push_back(nf.form == NormalForm::Cnf ? make_or(nf.root, std::move(lits))
                                                    : make_and(nf.root, std::move(lits)));
    }
    return nf.form == NormalForm::Cnf ? make_and(nf.root, std::move(groups))
                                      : make_or(nf.root, std::move(groups));
}

} // namespace ngc
