// Subgraphs of a fixed container graph, referenced by ID sets, and the unique
// inclusions between them.

#pragma once

#include <vector>

#include <ngc/morphism.hpp>

namespace ngc {

// Canonical form: sorted, duplicate-free ID vectors naming container elements.
// Edge-closure (both endpoints of every listed edge are listed) holds for
// every value built through make_subgraph or the lattice operations.
struct SubgraphRef {
    GraphPtr container;
    std::vector<std::string> node_ids;
    std::vector<std::string> edge_ids;
};

bool subgraph_equal(const SubgraphRef& a, const SubgraphRef& b);

std::size_t subgraph_size(const SubgraphRef& s);

// Sorts and dedups the IDs; throws std::invalid_argument unless they name
// container elements and the edge set is closed.
SubgraphRef make_subgraph(GraphPtr container, std::vector<std::string> node_ids,
                          std::vector<std::string> edge_ids);

ValidationReport validate_subgraph(const SubgraphRef& s);

SubgraphRef empty_subgraph(GraphPtr container);
SubgraphRef full_subgraph(GraphPtr container);

// Lattice operations; throw std::invalid_argument on container mismatch.
SubgraphRef meet(const SubgraphRef& a, const SubgraphRef& b);
SubgraphRef join(const SubgraphRef& a, const SubgraphRef& b);
bool is_subgraph(const SubgraphRef& a, const SubgraphRef& b);

// The referenced subgraph as a typed graph of its own; element IDs are kept.
TypedGraph materialize(const SubgraphRef& s);
GraphPtr materialize_ptr(const SubgraphRef& s);

// An inclusion domain -> codomain between subgraphs of one container.
// Inclusions are unique, so the pair of endpoints is the whole morphism.
struct Inclusion {
    SubgraphRef domain;
    SubgraphRef codomain;
};

// Throws std::invalid_argument unless domain is a subgraph of codomain.
Inclusion make_inclusion(SubgraphRef domain, SubgraphRef codomain);

Inclusion identity_inclusion(SubgraphRef s);
bool is_identity(const Inclusion& i);
bool inclusion_equal(const Inclusion& a, const Inclusion& b);

// Applies a first, then b; requires codomain(a) = domain(b).
Inclusion compose(const Inclusion& a, const Inclusion& b);

// The inclusion as a plain morphism between the materialized graphs.
GraphMorphism to_morphism(const Inclusion& i);

// Splits an injective q : C -> materialize(s) into an iso onto its image
// followed by the image's inclusion into s.
struct ImageFactorization {
    GraphMorphism iso; // C -> materialize(image), bijective
    SubgraphRef image; // q's image as a subgraph of s's container
};

ImageFactorization image_factorize(const GraphMorphism& q, const SubgraphRef& s);

} // namespace ngc
