#include <ngc/morphism.hpp>

#include <set>
#include <stdexcept>
#include <utility>

namespace ngc {

ValidationReport validate_morphism(const GraphMorphism& f) {
    ValidationReport report;
    if (!f.domain || !f.codomain) {
        report.add("morphism: missing domain or codomain");
        return report;
    }
    if (!type_graph_equal(f.domain->type_graph, f.codomain->type_graph))
        report.add("morphism: domain and codomain use different type graphs");
    const TypedGraph& dom = *f.domain;
    const TypedGraph& cod = *f.codomain;
    for (const auto& [id, type] : dom.nodes) {
        auto it = f.node_map.find(id);
        if (it == f.node_map.end()) {
            report.add("node '" + id + "': not mapped");
            continue;
        }
        auto img = cod.nodes.find(it->second);
        if (img == cod.nodes.end()) {
            report.add("node '" + id + "': image '" + it->second + "' is not a codomain node");
            continue;
        }
        if (img->second != type)
            report.add("node '" + id + "': image type '" + img->second + "' differs from '" + type + "'");
    }
    for (const auto& [id, img] : f.node_map) {
        (void)img;
        if (dom.nodes.find(id) == dom.nodes.end())
            report.add("node map: unknown domain node '" + id + "'");
    }
    for (const auto& [id, e] : dom.edges) {
        auto it = f.edge_map.find(id);
        if (it == f.edge_map.end()) {
            report.add("edge '" + id + "': not mapped");
            continue;
        }
        auto img = cod.edges.find(it->second);
        if (img == cod.edges.end()) {
            report.add("edge '" + id + "': image '" + it->second + "' is not a codomain edge");
            continue;
        }
        if (img->second.type != e.type)
            report.add("edge '" + id + "': image type '" + img->second.type + "' differs from '" + e.type + "'");
        auto src_img = f.node_map.find(e.src);
        if (src_img != f.node_map.end() && img->second.src != src_img->second)
            report.add("edge '" + id + "': image source '" + img->second.src +
                       "' differs from mapped source '" + src_img->second + "'");
        auto tar_img = f.node_map.find(e.tar);
        if (tar_img != f.node_map.end() && img->second.tar != tar_img->second)
            report.add("edge '" + id + "': image target '" + img->second.tar +
                       "' differs from mapped target '" + tar_img->second + "'");
    }
    for (const auto& [id, img] : f.edge_map) {
        (void)img;
        if (dom.edges.find(id) == dom.edges.end())
            report.add("edge map: unknown domain edge '" + id + "'");
    }
    return report;
}

namespace {

bool values_distinct(const std::map<std::string, std::string>& m) {
    std::set<std::string> seen;
    for (const auto& [key, value] : m) {
        (void)key;
        if (!seen.insert(value).second)
            return false;
    }
    return true;
}

} // namespace

bool is_injective(const GraphMorphism& f) {
    return values_distinct(f.node_map) && values_distinct(f.edge_map);
}

bool is_surjective(const GraphMorphism& f) {
    std::set<std::string> node_images, edge_images;
    for (const auto& [key, value] : f.node_map) {
        (void)key;
        node_images.insert(value);
    }
    for (const auto& [key, value] : f.edge_map) {
        (void)key;
        edge_images.insert(value);
    }
    return node_images.size() == f.codomain->nodes.size() &&
           edge_images.size() == f.codomain->edges.size();
}

bool is_bijective(const GraphMorphism& f) {
    return is_injective(f) && is_surjective(f);
}

GraphMorphism identity_morphism(GraphPtr g) {
    GraphMorphism f;
    f.domain = g;
    f.codomain = std::move(g);
    for (const auto& [id, type] : f.domain->nodes) {
        (void)type;
        f.node_map[id] = id;
    }
    for (const auto& [id, e] : f.domain->edges) {
        (void)e;
        f.edge_map[id] = id;
    }
    return f;
}

GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
    if (!graph_equal(f.codomain, g.domain))
        throw std::invalid_argument("compose: codomain of the first morphism differs from the domain of the second");
    GraphMorphism h;
    h.domain = f.domain;
    h.codomain = g.codomain;
    for (const auto& [x, y] : f.node_map)
        h.node_map[x] = g.node_map.at(y);
    for (const auto& [x, y] : f.edge_map)
        h.edge_map[x] = g.edge_map.at(y);
    return h;
}

bool morphism_equal(const GraphMorphism& f, const GraphMorphism& g) {
    return graph_equal(f.domain, g.domain) && graph_equal(f.codomain, g.codomain) &&
           f.node_map == g.node_map && f.edge_map == g.edge_map;
}

} // namespace ngc
