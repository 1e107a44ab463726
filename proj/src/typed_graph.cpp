#include <ngc/typed_graph.hpp>

#include <utility>

namespace ngc {

bool graph_equal(const TypedGraph& a, const TypedGraph& b) {
    return type_graph_equal(a.type_graph, b.type_graph) && a.nodes == b.nodes && a.edges == b.edges;
}

bool graph_equal(const GraphPtr& a, const GraphPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return graph_equal(*a, *b);
}

std::size_t graph_size(const TypedGraph& g) {
    return g.nodes.size() + g.edges.size();
}

bool is_empty(const TypedGraph& g) {
    return g.nodes.empty() && g.edges.empty();
}

TypedGraph empty_graph(TypeGraphPtr tg) {
    TypedGraph g;
    g.type_graph = std::move(tg);
    return g;
}

ValidationReport validate_typed_graph(const TypedGraph& g) {
    ValidationReport report;
    if (!g.type_graph) {
        report.add("graph: missing type graph");
        return report;
    }
    const TypeGraph& tg = *g.type_graph;
    report.merge(validate_type_graph(tg));
    for (const auto& [id, type] : g.nodes) {
        if (!tg.has_node_type(type))
            report.add("node '" + id + "': unknown node type '" + type + "'");
    }
    for (const auto& [id, e] : g.edges) {
        auto et = tg.edge_types.find(e.type);
        if (et == tg.edge_types.end())
            report.add("edge '" + id + "': unknown edge type '" + e.type + "'");
        auto src = g.nodes.find(e.src);
        auto tar = g.nodes.find(e.tar);
        if (src == g.nodes.end())
            report.add("edge '" + id + "': missing source node '" + e.src + "'");
        if (tar == g.nodes.end())
            report.add("edge '" + id + "': missing target node '" + e.tar + "'");
        if (et != tg.edge_types.end()) {
            if (src != g.nodes.end() && src->second != et->second.src)
                report.add("edge '" + id + "': source type '" + src->second +
                           "' does not match edge type source '" + et->second.src + "'");
            if (tar != g.nodes.end() && tar->second != et->second.tar)
                report.add("edge '" + id + "': target type '" + tar->second +
                           "' does not match edge type target '" + et->second.tar + "'");
        }
    }
    return report;
}

} // namespace ngc
