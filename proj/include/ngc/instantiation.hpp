// Instantiations: occurrences of pattern graphs as subgraphs of a container.

#pragma once

#include <optional>

#include <ngc/enumerate.hpp>
#include <ngc/subgraph.hpp>

namespace ngc {

// An occurrence of a pattern C inside a host S: an iso from C onto a subgraph
// of the container, with that subgraph contained in the host.
struct Instantiation {
    GraphMorphism iso;  // C -> materialize(target), bijective
    SubgraphRef target; // the occurrence, a subgraph of the container
    SubgraphRef host;   // S, a subgraph of the same container
};

bool instantiation_equal(const Instantiation& a, const Instantiation& b);

bool host_is_container(const Instantiation& mu);

ValidationReport validate_instantiation(const Instantiation& mu);

// All instantiations of c in the host. Image factorization puts them in
// one-to-one correspondence with the injections c -> materialize(host), and
// the list follows that enumeration order.
std::vector<Instantiation> enumerate_instantiations(const GraphPtr& c, const SubgraphRef& host);

// The same occurrence viewed inside the whole container.
Instantiation extend_to_container(const Instantiation& mu);

// The unique inclusion b with b after mu0's iso equal to mu1's iso after a,
// if it exists; requires a : domain(mu0 iso) -> domain(mu1 iso).
std::optional<Inclusion> instantiate_morphism(const GraphMorphism& a, const Instantiation& mu0,
                                              const Instantiation& mu1);

// For a : C0 -> C1 injective and mu0 an occurrence of C0: every occurrence of
// C1 in mu0's host whose restriction along a is exactly mu0, paired with the
// inclusion of mu0's occurrence into it.
struct MorphismInstantiation {
    Inclusion incl; // target(mu0) -> target(mu1)
    Instantiation target;
};

std::vector<MorphismInstantiation> enumerate_morphism_instantiations(const GraphMorphism& a,
                                                                     const Instantiation& mu0);

} // namespace ngc
