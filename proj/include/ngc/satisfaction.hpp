// Satisfaction of nested conditions, in the category of typed graphs and in
// the lattice of subgraphs of a container.

#pragma once

#include <ngc/condition.hpp>

namespace ngc {

// Whether the injective morphism g : root(c) -> G satisfies c. A quantifier
// Exists(a, d) is satisfied when some injective q : codomain(a) -> G with
// q after a = g satisfies d.
bool satisfies(const GraphMorphism& g, const GraphCondition& c);

// Satisfaction of a constraint (a condition over the empty graph) by G: the
// unique morphism from the empty graph into G satisfies c.
bool satisfies_constraint(const GraphPtr& g, const GraphCondition& c);

// Whether the inclusion g : root(c) -> G satisfies c. Inclusions are unique,
// so Exists(b, d) holds iff codomain(b) lies inside G and its inclusion
// satisfies d.
bool satisfies_sub(const Inclusion& g, const SubCondition& c);

// The same condition with every inclusion spelled out as a morphism between
// the materialized subgraphs; satisfies_sub(g, c) agrees with
// satisfies(to_morphism(g), to_graph_condition(c)).
GraphCondition to_graph_condition(const SubCondition& c);

} // namespace ngc
