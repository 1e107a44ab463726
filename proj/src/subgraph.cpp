#include <ngc/subgraph.hpp>

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <utility>

namespace ngc {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool is_sorted_unique(const std::vector<std::string>& ids) {
    return std::adjacent_find(ids.begin(), ids.end(),
                              [](const auto& a, const auto& b) { return a >= b; }) == ids.end();
}

bool sorted_contains(const std::vector<std::string>& ids, const std::string& id) {
    return std::binary_search(ids.begin(), ids.end(), id);
}

std::vector<std::string> sorted_intersection(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::string> sorted_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void require_same_container(const SubgraphRef& a, const SubgraphRef& b, const char* op) {
    if (!graph_equal(a.container, b.container))
        throw std::invalid_argument(std::string(op) + ": subgraphs live in different containers");
}

} // namespace

bool subgraph_equal(const SubgraphRef& a, const SubgraphRef& b) {
    return graph_equal(a.container, b.container) && a.node_ids == b.node_ids &&
           a.edge_ids == b.edge_ids;
}

std::size_t subgraph_size(const SubgraphRef& s) {
    return s.node_ids.size() + s.edge_ids.size();
}

ValidationReport validate_subgraph(const SubgraphRef& s) {
    ValidationReport report;
    if (!s.container) {
        report.add("subgraph: missing container");
        return report;
    }
    if (!is_sorted_unique(s.node_ids))
        report.add("subgraph: node IDs are not sorted and duplicate-free");
    if (!is_sorted_unique(s.edge_ids))
        report.add("subgraph: edge IDs are not sorted and duplicate-free");
    for (const auto& id : s.node_ids) {
        if (s.container->nodes.find(id) == s.container->nodes.end())
            report.add("subgraph: unknown container node '" + id + "'");
    }
    for (const auto& id : s.edge_ids) {
        auto it = s.container->edges.find(id);
        if (it == s.container->edges.end()) {
            report.add("subgraph: unknown container edge '" + id + "'");
            continue;
        }
        if (!sorted_contains(s.node_ids, it->second.src))
            report.add("subgraph: edge '" + id + "' lacks its source node '" + it->second.src + "'");
        if (!sorted_contains(s.node_ids, it->second.tar))
            report.add("subgraph: edge '" + id + "' lacks its target node '" + it->second.tar + "'");
    }
    return report;
}

SubgraphRef make_subgraph(GraphPtr container, std::vector<std::string> node_ids,
                          std::vector<std::string> edge_ids) {
    SubgraphRef s{std::move(container), sorted_unique(std::move(node_ids)),
                  sorted_unique(std::move(edge_ids))};
    auto report = validate_subgraph(s);
    if (!report.ok())
        throw std::invalid_argument("make_subgraph: " + report.violations.front());
    return s;
}

SubgraphRef empty_subgraph(GraphPtr container) {
    return SubgraphRef{std::move(container), {}, {}};
}

SubgraphRef full_subgraph(GraphPtr container) {
    SubgraphRef s;
    s.container = std::move(container);
    for (const auto& [id, type] : s.container->nodes) {
        (void)type;
        s.node_ids.push_back(id);
    }
    for (const auto& [id, e] : s.container->edges) {
        (void)e;
        s.edge_ids.push_back(id);
    }
    return s;
}

SubgraphRef meet(const SubgraphRef& a, const SubgraphRef& b) {
    require_same_container(a, b, "meet");
    return SubgraphRef{a.container, sorted_intersection(a.node_ids, b.node_ids),
                       sorted_intersection(a.edge_ids, b.edge_ids)};
}

SubgraphRef join(const SubgraphRef& a, const SubgraphRef& b) {
    require_same_container(a, b, "join");
    return SubgraphRef{a.container, sorted_union(a.node_ids, b.node_ids),
                       sorted_union(a.edge_ids, b.edge_ids)};
}

bool is_subgraph(const SubgraphRef& a, const SubgraphRef& b) {
    require_same_container(a, b, "is_subgraph");
    return std::includes(b.node_ids.begin(), b.node_ids.end(), a.node_ids.begin(), a.node_ids.end()) &&
           std::includes(b.edge_ids.begin(), b.edge_ids.end(), a.edge_ids.begin(), a.edge_ids.end());
}

TypedGraph materialize(const SubgraphRef& s) {
    TypedGraph g;
    g.type_graph = s.container->type_graph;
    for (const auto& id : s.node_ids)
        g.nodes[id] = s.container->nodes.at(id);
    for (const auto& id : s.edge_ids)
        g.edges[id] = s.container->edges.at(id);
    return g;
}

GraphPtr materialize_ptr(const SubgraphRef& s) {
    return std::make_shared<const TypedGraph>(materialize(s));
}

Inclusion make_inclusion(SubgraphRef domain, SubgraphRef codomain) {
    if (!is_subgraph(domain, codomain))
        throw std::invalid_argument("make_inclusion: domain is not a subgraph of codomain");
    return Inclusion{std::move(domain), std::move(codomain)};
}

Inclusion identity_inclusion(SubgraphRef s) {
    Inclusion i;
    i.domain = s;
    i.codomain = std::move(s);
    return i;
}

bool is_identity(const Inclusion& i) {
    return subgraph_equal(i.domain, i.codomain);
}

bool inclusion_equal(const Inclusion& a, const Inclusion& b) {
    return subgraph_equal(a.domain, b.domain) && subgraph_equal(a.codomain, b.codomain);
}

Inclusion compose(const Inclusion& a, const Inclusion& b) {
    if (!subgraph_equal(a.codomain, b.domain))
        throw std::invalid_argument("compose: codomain of the first inclusion differs from the domain of the second");
    return Inclusion{a.domain, b.codomain};
}

GraphMorphism to_morphism(const Inclusion& i) {
    GraphMorphism f;
    f.domain = materialize_ptr(i.domain);
    f.codomain = materialize_ptr(i.codomain);
    for (const auto& id : i.domain.node_ids)
        f.node_map[id] = id;
    for (const auto& id : i.domain.edge_ids)
        f.edge_map[id] = id;
    return f;
}

ImageFactorization image_factorize(const GraphMorphism& q, const SubgraphRef& s) {
    if (!is_injective(q))
        throw std::invalid_argument("image_factorize: morphism is not injective");
    if (!q.codomain || !graph_equal(*q.codomain, materialize(s)))
        throw std::invalid_argument("image_factorize: morphism codomain is not the given subgraph");
    std::vector<std::string> nodes, edges;
    nodes.reserve(q.node_map.size());
    edges.reserve(q.edge_map.size());
    for (const auto& [id, img] : q.node_map) {
        (void)id;
        nodes.push_back(img);
    }
    for (const auto& [id, img] : q.edge_map) {
        (void)id;
        edges.push_back(img);
    }
    ImageFactorization out;
    out.image = make_subgraph(s.container, std::move(nodes), std::move(edges));
    out.iso = q;
    out.iso.codomain = materialize_ptr(out.image);
    return out;
}

} // namespace ngc
