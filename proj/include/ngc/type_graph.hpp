// Type graphs: the fixed vocabulary of node and edge types.

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include <ngc/validation.hpp>

namespace ngc {

struct EdgeType {
    std::string src;
    std::string tar;

    bool operator==(const EdgeType&) const = default;
};

struct TypeGraph {
    std::set<std::string> node_types;
    std::map<std::string, EdgeType> edge_types;

    bool has_node_type(const std::string& id) const { return node_types.count(id) > 0; }
    bool has_edge_type(const std::string& id) const { return edge_types.count(id) > 0; }

    bool operator==(const TypeGraph&) const = default;
};

using TypeGraphPtr = std::shared_ptr<const TypeGraph>;

// Every edge type must connect declared node types.
ValidationReport validate_type_graph(const TypeGraph& tg);

// Structural equality with a pointer fast path; null equals only null.
bool type_graph_equal(const TypeGraphPtr& a, const TypeGraphPtr& b);

} // namespace ngc
