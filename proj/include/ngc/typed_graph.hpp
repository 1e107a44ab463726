// Typed graphs: finite directed multigraphs typed over a fixed type graph.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>

#include <ngc/type_graph.hpp>
#include <ngc/validation.hpp>

namespace ngc {

struct Edge {
    std::string type;
    std::string src;
    std::string tar;

    bool operator==(const Edge&) const = default;
};

// Node and edge IDs are opaque strings, unique within their kind. The name is
// a serialization label and never takes part in equality.
struct TypedGraph {
    TypeGraphPtr type_graph;
    std::map<std::string, std::string> nodes; // node ID -> node type
    std::map<std::string, Edge> edges;        // edge ID -> (type, src, tar)
    std::string name;
};

using GraphPtr = std::shared_ptr<const TypedGraph>;

// Structural equality: equal type graphs, nodes, and edges; ignores name.
bool graph_equal(const TypedGraph& a, const TypedGraph& b);
bool graph_equal(const GraphPtr& a, const GraphPtr& b);

// Number of elements: nodes plus edges.
std::size_t graph_size(const TypedGraph& g);

bool is_empty(const TypedGraph& g);

TypedGraph empty_graph(TypeGraphPtr tg);

// Checks node/edge types are declared, edge endpoints exist, and typing
// commutes with src/tar.
ValidationReport validate_typed_graph(const TypedGraph& g);

} // namespace ngc
