// Nested conditions, generically over typed-graph morphisms and over
// subgraph inclusions of a fixed container.

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include <ngc/instantiation.hpp>

namespace ngc {

enum class CondOp {
    True,   // no children
    Exists, // morphism plus one child, the body, over the morphism's codomain
    Not,    // one child
    And,    // any number of children; empty means true
    Or,     // any number of children; empty means false
    // Surface forms, removed by desugar:
    False,   // becomes Not(True)
    Forall,  // morphism plus body; becomes Not(Exists(m, Not(body)))
    Implies, // two children; becomes Or(Not(first), second)
};

constexpr bool is_core_op(CondOp op) {
    return op == CondOp::True || op == CondOp::Exists || op == CondOp::Not ||
           op == CondOp::And || op == CondOp::Or;
}

template <typename MorphismT, typename ObjectT>
struct BasicCondition {
    using Morphism = MorphismT;
    using Object = ObjectT;

    CondOp op = CondOp::True;
    Object root{};
    std::optional<MorphismT> morphism; // Exists / Forall only
    std::vector<BasicCondition> children;
};

using GraphCondition = BasicCondition<GraphMorphism, GraphPtr>;
using SubCondition = BasicCondition<Inclusion, SubgraphRef>;

// Uniform access to the two morphism flavors.
inline const GraphPtr& morphism_domain(const GraphMorphism& m) { return m.domain; }
inline const GraphPtr& morphism_codomain(const GraphMorphism& m) { return m.codomain; }
inline const SubgraphRef& morphism_domain(const Inclusion& m) { return m.domain; }
inline const SubgraphRef& morphism_codomain(const Inclusion& m) { return m.codomain; }
inline bool object_equal(const GraphPtr& a, const GraphPtr& b) { return graph_equal(a, b); }
inline bool object_equal(const SubgraphRef& a, const SubgraphRef& b) { return subgraph_equal(a, b); }

inline GraphCondition make_true(GraphPtr root) {
    GraphCondition c;
    c.root = std::move(root);
    return c;
}

inline SubCondition make_true(SubgraphRef root) {
    SubCondition c;
    c.root = std::move(root);
    return c;
}

inline GraphCondition make_false(GraphPtr root) {
    GraphCondition c;
    c.op = CondOp::False;
    c.root = std::move(root);
    return c;
}

inline SubCondition make_false(SubgraphRef root) {
    SubCondition c;
    c.op = CondOp::False;
    c.root = std::move(root);
    return c;
}

template <typename C>
C make_not(C body) {
    C c;
    c.op = CondOp::Not;
    c.root = body.root;
    c.children.push_back(std::move(body));
    return c;
}

template <typename C>
C make_and(typename C::Object root, std::vector<C> children) {
    C c;
    c.op = CondOp::And;
    c.root = std::move(root);
    c.children = std::move(children);
    return c;
}

template <typename C>
C make_or(typename C::Object root, std::vector<C> children) {
    C c;
    c.op = CondOp::Or;
    c.root = std::move(root);
    c.children = std::move(children);
    return c;
}

// Braced-list conveniences; the vector overloads cannot deduce C from one.
template <typename C>
C make_and(typename C::Object root, std::initializer_list<C> children) {
    return make_and(std::move(root), std::vector<C>(children));
}

template <typename C>
C make_or(typename C::Object root, std::initializer_list<C> children) {
    return make_or(std::move(root), std::vector<C>(children));
}

template <typename C>
C make_exists(typename C::Morphism m, C body) {
    C c;
    c.op = CondOp::Exists;
    c.root = morphism_domain(m);
    c.morphism = std::move(m);
    c.children.push_back(std::move(body));
    return c;
}

template <typename C>
C make_forall(typename C::Morphism m, C body) {
    C c;
    c.op = CondOp::Forall;
    c.root = morphism_domain(m);
    c.morphism = std::move(m);
    c.children.push_back(std::move(body));
    return c;
}

template <typename C>
C make_implies(C premise, C conclusion) {
    C c;
    c.op = CondOp::Implies;
    c.root = premise.root;
    c.children.push_back(std::move(premise));
    c.children.push_back(std::move(conclusion));
    return c;
}

// Depth of Exists/Forall nesting; Not, And, Or, and Implies are transparent.
template <typename C>
std::size_t nesting_level(const C& c) {
    std::size_t level = 0;
    for (const auto& child : c.children)
        level = std::max(level, nesting_level(child));
    if (c.op == CondOp::Exists || c.op == CondOp::Forall)
        ++level;
    return level;
}

// Number of Exists/Forall nodes.
template <typename C>
std::size_t count_morphisms(const C& c) {
    std::size_t n = (c.op == CondOp::Exists || c.op == CondOp::Forall) ? 1 : 0;
    for (const auto& child : c.children)
        n += count_morphisms(child);
    return n;
}

template <typename C>
bool is_core(const C& c) {
    if (!is_core_op(c.op))
        return false;
    return std::all_of(c.children.begin(), c.children.end(),
                       [](const C& child) { return is_core(child); });
}

// Rewrites False, Forall, and Implies into the core operators.
template <typename C>
C desugar(const C& c) {
    switch (c.op) {
    case CondOp::False: {
        C t;
        t.root = c.root;
        return make_not(std::move(t));
    }
    case CondOp::Forall:
        return make_not(make_exists(*c.morphism, make_not(desugar(c.children.front()))));
    case CondOp::Implies: {
        std::vector<C> alts;
        alts.push_back(make_not(desugar(c.children.front())));
        alts.push_back(desugar(c.children.back()));
        return make_or(c.root, std::move(alts));
    }
    default: {
        C out;
        out.op = c.op;
        out.root = c.root;
        out.morphism = c.morphism;
        out.children.reserve(c.children.size());
        for (const auto& child : c.children)
            out.children.push_back(desugar(child));
        return out;
    }
    }
}

bool condition_equal(const GraphCondition& a, const GraphCondition& b);
bool condition_equal(const SubCondition& a, const SubCondition& b);

// Checks operator arity, morphism validity (injective for typed-graph
// morphisms, genuine inclusions for subgraphs), and that roots chain: an
// Exists/Forall node sits over its morphism's domain with the body over the
// codomain, and every other child shares its parent's root.
ValidationReport validate_condition(const GraphCondition& c);
ValidationReport validate_condition(const SubCondition& c);

} // namespace ngc
