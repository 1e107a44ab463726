#include <ngc/instantiate.hpp>

#include <limits>
#include <stdexcept>
#include <utility>

namespace ngc {

namespace {

SubCondition inst(const GraphCondition& c, const Instantiation& mu0);

// Translates Not(d) by looking one operator ahead, so that negation only ever
// lands directly on an occurrence literal.
SubCondition inst_neg(const GraphCondition& d, const Instantiation& mu0) {
    const SubgraphRef& b0 = mu0.target;
    switch (d.op) {
    case CondOp::True:
        return make_not(make_true(b0));
    case CondOp::Not:
        return inst(d.children.front(), mu0);
    case CondOp::And: {
        std::vector<SubCondition> kids;
        kids.reserve(d.children.size());
        for (const auto& e : d.children)
            kids.push_back(inst_neg(e, mu0));
        return make_or(b0, std::move(kids));
    }
    case CondOp::Or: {
        std::vector<SubCondition> kids;
        kids.reserve(d.children.size());
        for (const auto& e : d.children)
            kids.push_back(inst_neg(e, mu0));
        return make_and(b0, std::move(kids));
    }
    case CondOp::Exists: {
        // No occurrence at all refutes the Exists, so the empty conjunction
        // is true; otherwise every occurrence must be absent or fail the
        // body.
        auto occurrences = enumerate_morphism_instantiations(*d.morphism, mu0);
        if (occurrences.empty())
            return make_true(b0);
        std::vector<SubCondition> kids;
        kids.reserve(occurrences.size());
        for (const auto& occ : occurrences) {
            std::vector<SubCondition> alts;
            alts.push_back(make_not(make_exists(occ.incl, make_true(occ.incl.codomain))));
            alts.push_back(make_exists(occ.incl, inst_neg(d.children.front(), occ.target)));
            kids.push_back(make_or(b0, std::move(alts)));
        }
        return make_and(b0, std::move(kids));
    }
    default:
        throw std::invalid_argument("instantiate: condition must use core operators only");
    }
}

SubCondition inst(const GraphCondition& c, const Instantiation& mu0) {
    const SubgraphRef& b0 = mu0.target;
    switch (c.op) {
    case CondOp::True:
        return make_true(b0);
    case CondOp::Not:
        return inst_neg(c.children.front(), mu0);
    case CondOp::And: {
        std::vector<SubCondition> kids;
        kids.reserve(c.children.size());
        for (const auto& d : c.children)
            kids.push_back(inst(d, mu0));
        return make_and(b0, std::move(kids));
    }
    case CondOp::Or: {
        std::vector<SubCondition> kids;
        kids.reserve(c.children.size());
        for (const auto& d : c.children)
            kids.push_back(inst(d, mu0));
        return make_or(b0, std::move(kids));
    }
    case CondOp::Exists: {
        // One disjunct per occurrence of the codomain that restricts to mu0;
        // no occurrence means the empty disjunction, which is false.
        auto occurrences = enumerate_morphism_instantiations(*c.morphism, mu0);
        if (occurrences.empty())
            return make_not(make_true(b0));
        std::vector<SubCondition> kids;
        kids.reserve(occurrences.size());
        for (const auto& occ : occurrences)
            kids.push_back(make_exists(occ.incl, inst(c.children.front(), occ.target)));
        return make_or(b0, std::move(kids));
    }
    default:
        throw std::invalid_argument("instantiate: condition must use core operators only");
    }
}

} // namespace

SubCondition instantiate_condition(const GraphCondition& c, const Instantiation& mu0) {
    auto report = validate_condition(c);
    if (!report.ok())
        throw std::invalid_argument("instantiate_condition: " + report.violations.front());
    auto mu_report = validate_instantiation(mu0);
    if (!mu_report.ok())
        throw std::invalid_argument("instantiate_condition: " + mu_report.violations.front());
    if (!host_is_container(mu0))
        throw std::invalid_argument("instantiate_condition: instantiation must host the whole container");
    if (!graph_equal(mu0.iso.domain, c.root))
        throw std::invalid_argument("instantiate_condition: instantiation does not instantiate the condition's root");
    return inst(desugar(c), mu0);
}

SubCondition instantiate_constraint(const GraphCondition& c, const GraphPtr& container) {
    if (!c.root || !is_empty(*c.root))
        throw std::invalid_argument("instantiate_constraint: constraint root must be the empty graph");
    Instantiation mu0;
    mu0.target = empty_subgraph(container);
    mu0.host = full_subgraph(container);
    mu0.iso.domain = c.root;
    mu0.iso.codomain = materialize_ptr(mu0.target);
    return instantiate_condition(c, mu0);
}

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > kMax - b ? kMax : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0)
        return 0;
    return a > kMax / b ? kMax : a * b;
}

// Injective placements of k elements into n: n * (n-1) * ... * (n-k+1).
std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < k; ++i)
        out = sat_mul(out, n - i);
    return out;
}

std::uint64_t bound_sum(const GraphCondition& c, std::uint64_t container_size) {
    std::uint64_t sum = 0;
    if (c.op == CondOp::Exists || c.op == CondOp::Forall)
        sum = falling_factorial(container_size, graph_size(*morphism_codomain(*c.morphism)));
    for (const auto& child : c.children)
        sum = sat_add(sum, bound_sum(child, container_size));
    return sum;
}

} // namespace

std::uint64_t estimate_size_bound(const GraphCondition& c, const TypedGraph& container) {
    return sat_mul(2, bound_sum(c, graph_size(container)));
}

} // namespace ngc
