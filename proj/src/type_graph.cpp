#include <ngc/type_graph.hpp>

namespace ngc {

ValidationReport validate_type_graph(const TypeGraph& tg) {
    ValidationReport report;
    for (const auto& [id, et] : tg.edge_types) {
        if (!tg.has_node_type(et.src))
            report.add("edge type '" + id + "': unknown source node type '" + et.src + "'");
        if (!tg.has_node_type(et.tar))
            report.add("edge type '" + id + "': unknown target node type '" + et.tar + "'");
    }
    return report;
}

bool type_graph_equal(const TypeGraphPtr& a, const TypeGraphPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

} // namespace ngc
