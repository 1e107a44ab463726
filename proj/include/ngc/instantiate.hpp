// Translation of typed-graph conditions into subgraph conditions over a
// fixed container, preserving satisfaction.

#pragma once

#include <cstdint>

#include <ngc/condition.hpp>

namespace ngc {

// Translates c into a condition over mu0's occurrence, quantifying over the
// occurrences of each codomain instead of over morphisms. mu0 must host the
// whole container and instantiate c's root. An Exists with no occurrence
// becomes Not(True); a negated Exists with no occurrence becomes True.
SubCondition instantiate_condition(const GraphCondition& c, const Instantiation& mu0);

// Instantiates a constraint (a condition over the empty graph) along the
// unique occurrence of the empty graph in the container.
SubCondition instantiate_constraint(const GraphCondition& c, const GraphPtr& container);

// Upper bound on the number of Exists nodes instantiation can produce: twice
// the sum, over the quantifiers of c with codomain C, of the falling
// factorial of the container size over C's size (nodes and edges both
// count). Saturates instead of overflowing.
std::uint64_t estimate_size_bound(const GraphCondition& c, const TypedGraph& container);

} // namespace ngc
