// Morphisms of typed graphs: structure- and type-preserving node/edge maps.

#pragma once

#include <ngc/typed_graph.hpp>

namespace ngc {

struct GraphMorphism {
    GraphPtr domain;
    GraphPtr codomain;
    std::map<std::string, std::string> node_map;
    std::map<std::string, std::string> edge_map;
};

// Empty report iff both maps are total on the domain, hit existing codomain
// elements, commute with src/tar, and preserve types.
ValidationReport validate_morphism(const GraphMorphism& f);

bool is_injective(const GraphMorphism& f);
bool is_surjective(const GraphMorphism& f);
bool is_bijective(const GraphMorphism& f);

GraphMorphism identity_morphism(GraphPtr g);

// Applies f first, then g; requires codomain(f) = domain(g) structurally.
GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g);

bool morphism_equal(const GraphMorphism& f, const GraphMorphism& g);

} // namespace ngc
