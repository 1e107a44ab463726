#include <ngc/satisfaction.hpp>

#include <stdexcept>

namespace ngc {

namespace {

bool satisfies_impl(const GraphMorphism& g, const GraphCondition& c) {
    switch (c.op) {
    case CondOp::True:
        return true;
    case CondOp::False:
        return false;
    case CondOp::Not:
        return !satisfies_impl(g, c.children.front());
    case CondOp::And:
        for (const auto& child : c.children)
            if (!satisfies_impl(g, child))
                return false;
        return true;
    case CondOp::Or:
        for (const auto& child : c.children)
            if (satisfies_impl(g, child))
                return true;
        return false;
    case CondOp::Implies:
        return !satisfies_impl(g, c.children.front()) || satisfies_impl(g, c.children.back());
    case CondOp::Exists:
    case CondOp::Forall: {
        const GraphMorphism& a = *c.morphism;
        // Witnesses must close the triangle q after a = g, which pins down q
        // on the image of a.
        ForcedAssignment forced;
        for (const auto& [x, img] : a.node_map)
            forced.node_map[img] = g.node_map.at(x);
        for (const auto& [x, img] : a.edge_map)
            forced.edge_map[img] = g.edge_map.at(x);
        bool all = c.op == CondOp::Forall;
        for (const auto& q : enumerate_injective_morphisms(a.codomain, g.codomain, forced)) {
            bool sat = satisfies_impl(q, c.children.front());
            if (all && !sat)
                return false;
            if (!all && sat)
                return true;
        }
        return all;
    }
    }
    return false;
}

bool satisfies_sub_impl(const Inclusion& g, const SubCondition& c) {
    switch (c.op) {
    case CondOp::True:
        return true;
    case CondOp::False:
        return false;
    case CondOp::Not:
        return !satisfies_sub_impl(g, c.children.front());
    case CondOp::And:
        for (const auto& child : c.children)
            if (!satisfies_sub_impl(g, child))
                return false;
        return true;
    case CondOp::Or:
        for (const auto& child : c.children)
            if (satisfies_sub_impl(g, child))
                return true;
        return false;
    case CondOp::Implies:
        return !satisfies_sub_impl(g, c.children.front()) || satisfies_sub_impl(g, c.children.back());
    case CondOp::Exists:
    case CondOp::Forall: {
        // The only candidate witness is the inclusion of the codomain, and it
        // exists iff the codomain lies inside G.
        const SubgraphRef& b1 = morphism_codomain(*c.morphism);
        if (!is_subgraph(b1, g.codomain))
            return c.op == CondOp::Forall;
        return satisfies_sub_impl(Inclusion{b1, g.codomain}, c.children.front());
    }
    }
    return false;
}

} // namespace

bool satisfies(const GraphMorphism& g, const GraphCondition& c) {
    if (!is_injective(g))
        throw std::invalid_argument("satisfies: morphism is not injective");
    if (!graph_equal(g.domain, c.root))
        throw std::invalid_argument("satisfies: morphism domain differs from the condition's root");
    return satisfies_impl(g, c);
}

bool satisfies_constraint(const GraphPtr& g, const GraphCondition& c) {
    if (!c.root || !is_empty(*c.root))
        throw std::invalid_argument("satisfies_constraint: constraint root must be the empty graph");
    GraphMorphism initial;
    initial.domain = c.root;
    initial.codomain = g;
    return satisfies_impl(initial, c);
}

bool satisfies_sub(const Inclusion& g, const SubCondition& c) {
    if (!is_subgraph(g.domain, g.codomain))
        throw std::invalid_argument("satisfies_sub: not an inclusion");
    if (!object_equal(g.domain, c.root))
        throw std::invalid_argument("satisfies_sub: inclusion domain differs from the condition's root");
    return satisfies_sub_impl(g, c);
}

GraphCondition to_graph_condition(const SubCondition& c) {
    GraphCondition out;
    out.op = c.op;
    out.root = materialize_ptr(c.root);
    if (c.morphism)
        out.morphism = to_morphism(*c.morphism);
    out.children.reserve(c.children.size());
    for (const auto& child : c.children)
        out.children.push_back(to_graph_condition(child));
    return out;
}

} // namespace ngc
