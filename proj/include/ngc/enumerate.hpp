// Injective-morphism search between typed graphs.

#pragma once

#include <vector>

#include <ngc/morphism.hpp>

namespace ngc {

// Partial assignment that every returned morphism must extend. Forced edge
// images also force the images of their endpoints.
struct ForcedAssignment {
    std::map<std::string, std::string> node_map;
    std::map<std::string, std::string> edge_map;
};

// All injective morphisms pattern -> host, ordered lexicographically by the
// node image tuple (pattern nodes in sorted ID order), then by the edge image
// tuple. Splits the search across threads when the host is large enough; the
// result is identical to the serial variant. Throws std::invalid_argument on
// a type-graph mismatch or unknown forced IDs; an unsatisfiable forced
// assignment yields an empty result.
std::vector<GraphMorphism> enumerate_injective_morphisms(const GraphPtr& pattern,
                                                         const GraphPtr& host,
                                                         const ForcedAssignment& forced = {});

// Single-threaded reference implementation with the same contract.
std::vector<GraphMorphism> enumerate_injective_morphisms_serial(const GraphPtr& pattern,
                                                                const GraphPtr& host,
                                                                const ForcedAssignment& forced = {});

} // namespace ngc
