// Shared test fixtures: hand-rolled brute-force oracles kept independent of
// the library's search code, exhaustive subgraph enumeration, and seeded
// random generators for graphs and conditions.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <ngc/condition.hpp>
#include <ngc/enumerate.hpp>
#include <ngc/subgraph.hpp>

namespace ngc::testing {

// Two node types with a loop and both directions between them; small enough
// for exhaustive sweeps yet rich enough for parallel edges and cycles.
inline TypeGraphPtr two_type_graph() {
    static TypeGraphPtr tg = [] {
        TypeGraph t;
        t.node_types = {"A", "B"};
        t.edge_types = {{"aa", {"A", "A"}}, {"ab", {"A", "B"}}, {"ba", {"B", "A"}}};
        return std::make_shared<const TypeGraph>(std::move(t));
    }();
    return tg;
}

using NodeSpec = std::pair<std::string, std::string>;                            // id, type
using EdgeSpec = std::tuple<std::string, std::string, std::string, std::string>; // id, type, src, tar

inline GraphPtr make_graph(TypeGraphPtr tg, const std::vector<NodeSpec>& nodes,
                           const std::vector<EdgeSpec>& edges, std::string name = "") {
    TypedGraph g;
    g.type_graph = std::move(tg);
    g.name = std::move(name);
    for (const auto& [id, type] : nodes)
        g.nodes.emplace(id, type);
    for (const auto& [id, type, src, tar] : edges)
        g.edges.emplace(id, Edge{type, src, tar});
    return std::make_shared<const TypedGraph>(std::move(g));
}

// All injective morphisms pattern -> host by generate-and-filter over raw
// assignment tuples, with validity checked directly against the definition.
// Same nested iteration order as the search (sorted pattern ids, ascending
// host candidates, nodes before edges), so the result must match the
// library's output element for element, not just as a set.
inline std::vector<GraphMorphism> brute_force_injections(GraphPtr pattern, GraphPtr host) {
    std::vector<std::string> pattern_nodes, pattern_edges, host_nodes, host_edges;
    for (const auto& [id, t] : pattern->nodes)
        pattern_nodes.push_back(id);
    for (const auto& [id, e] : pattern->edges)
        pattern_edges.push_back(id);
    for (const auto& [id, t] : host->nodes)
        host_nodes.push_back(id);
    for (const auto& [id, e] : host->edges)
        host_edges.push_back(id);

    std::vector<GraphMorphism> out;
    std::map<std::string, std::string> node_map, edge_map;

    auto node_images_distinct = [&] {
        std::set<std::string> seen;
        for (const auto& [x, y] : node_map)
            if (!seen.insert(y).second)
                return false;
        return true;
    };
    auto valid_leaf = [&] {
        if (!node_images_distinct())
            return false;
        for (const auto& [x, y] : node_map)
            if (pattern->nodes.at(x) != host->nodes.at(y))
                return false;
        std::set<std::string> seen;
        for (const auto& [x, y] : edge_map) {
            if (!seen.insert(y).second)
                return false;
            const Edge& p = pattern->edges.at(x);
            const Edge& h = host->edges.at(y);
            if (p.type != h.type || node_map.at(p.src) != h.src || node_map.at(p.tar) != h.tar)
                return false;
        }
        return true;
    };

    auto assign_edges = [&](auto&& self, std::size_t i) -> void {
        if (i == pattern_edges.size()) {
            if (valid_leaf()) {
                GraphMorphism m;
                m.domain = pattern;
                m.codomain = host;
                m.node_map = node_map;
                m.edge_map = edge_map;
                out.push_back(std::move(m));
            }
            return;
        }
        for (const auto& y : host_edges) {
            edge_map[pattern_edges[i]] = y;
            self(self, i + 1);
        }
        edge_map.erase(pattern_edges[i]);
    };
    auto assign_nodes = [&](auto&& self, std::size_t i) -> void {
        if (i == pattern_nodes.size())
            return assign_edges(assign_edges, 0);
        for (const auto& y : host_nodes) {
            node_map[pattern_nodes[i]] = y;
            self(self, i + 1);
        }
        node_map.erase(pattern_nodes[i]);
    };
    assign_nodes(assign_nodes, 0);
    return out;
}

// Every edge-closed subset, by sweeping node and edge bitmasks.
inline std::vector<SubgraphRef> all_subgraphs(GraphPtr container) {
    std::vector<std::string> nodes, edges;
    for (const auto& [id, t] : container->nodes)
        nodes.push_back(id);
    for (const auto& [id, e] : container->edges)
        edges.push_back(id);

    std::vector<SubgraphRef> out;
    for (std::size_t nmask = 0; nmask < (std::size_t{1} << nodes.size()); ++nmask) {
        std::vector<std::string> picked_nodes;
        std::set<std::string> present;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nmask & (std::size_t{1} << i)) {
                picked_nodes.push_back(nodes[i]);
                present.insert(nodes[i]);
            }
        std::vector<std::size_t> closed_edges;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Edge& e = container->edges.at(edges[i]);
            if (present.count(e.src) && present.count(e.tar))
                closed_edges.push_back(i);
        }
        for (std::size_t emask = 0; emask < (std::size_t{1} << closed_edges.size()); ++emask) {
            std::vector<std::string> picked_edges;
            for (std::size_t i = 0; i < closed_edges.size(); ++i)
                if (emask & (std::size_t{1} << i))
                    picked_edges.push_back(edges[closed_edges[i]]);
            out.push_back(make_subgraph(container, picked_nodes, picked_edges));
        }
    }
    return out;
}

struct Rng {
    std::mt19937 engine;

    explicit Rng(unsigned seed) : engine(seed) {}

    int next(int lo, int hi) { // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(engine);
    }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(next(0, static_cast<int>(v.size()) - 1))];
    }
};

// Random typed graph over the two-type graph: node ids v0.., edge ids e0..
inline GraphPtr random_graph(Rng& rng, std::size_t node_count, std::size_t edge_count) {
    TypeGraphPtr tg = two_type_graph();
    TypedGraph g;
    g.type_graph = tg;
    std::vector<std::string> types(tg->node_types.begin(), tg->node_types.end());
    for (std::size_t i = 0; i < node_count; ++i)
        g.nodes.emplace("v" + std::to_string(i), rng.pick(types));
    std::vector<std::string> edge_types;
    for (const auto& [id, et] : tg->edge_types)
        edge_types.push_back(id);
    for (std::size_t i = 0; i < edge_count; ++i) {
        const std::string& et = rng.pick(edge_types);
        std::vector<std::string> sources, targets;
        for (const auto& [id, t] : g.nodes) {
            if (t == tg->edge_types.at(et).src)
                sources.push_back(id);
            if (t == tg->edge_types.at(et).tar)
                targets.push_back(id);
        }
        if (sources.empty() || targets.empty())
            continue;
        g.edges.emplace("e" + std::to_string(i), Edge{et, rng.pick(sources), rng.pick(targets)});
    }
    return std::make_shared<const TypedGraph>(std::move(g));
}

// Random lattice condition with the given root; includes empty conjunctions
// and disjunctions and the surface operators.
inline SubCondition random_sub_condition(Rng& rng, const std::vector<SubgraphRef>& lattice,
                                         const SubgraphRef& root, int depth) {
    int roll = depth == 0 ? rng.next(0, 1) : rng.next(0, 9);
    switch (roll) {
    case 0:
        return make_true(root);
    case 1:
        return make_false(root);
    case 2:
    case 3:
    case 4: {
        std::vector<SubgraphRef> supersets;
        for (const auto& s : lattice)
            if (is_subgraph(root, s))
                supersets.push_back(s);
        SubgraphRef target = rng.pick(supersets);
        SubCondition body = random_sub_condition(rng, lattice, target, depth - 1);
        Inclusion step{root, target};
        return roll == 4 ? make_forall(step, std::move(body)) : make_exists(step, std::move(body));
    }
    case 5:
        return make_not(random_sub_condition(rng, lattice, root, depth - 1));
    case 6:
    case 7:
    case 8: {
        int arity = rng.next(0, 3);
        std::vector<SubCondition> children;
        for (int i = 0; i < arity; ++i)
            children.push_back(random_sub_condition(rng, lattice, root, depth - 1));
        return roll == 8 ? make_or(root, std::move(children)) : make_and(root, std::move(children));
    }
    default: {
        SubCondition p = random_sub_condition(rng, lattice, root, depth - 1);
        SubCondition q = random_sub_condition(rng, lattice, root, depth - 1);
        return make_implies(std::move(p), std::move(q));
    }
    }
}

// Random typed-graph condition: quantifier steps extend the context by at
// most two fresh elements under an identity embedding.
struct GraphConditionGen {
    Rng& rng;
    TypeGraphPtr tg = two_type_graph();
    std::size_t max_nodes = static_cast<std::size_t>(-1);
    int fresh = 0;

    GraphPtr extend(const GraphPtr& base) {
        TypedGraph g = *base;
        g.name.clear();
        int additions = rng.next(0, 2);
        for (int i = 0; i < additions; ++i) {
            bool node_allowed = g.nodes.size() < max_nodes;
            if (node_allowed && (g.nodes.empty() || rng.next(0, 1) == 0)) {
                std::vector<std::string> types(tg->node_types.begin(), tg->node_types.end());
                g.nodes.emplace("n" + std::to_string(fresh++), rng.pick(types));
            } else {
                std::vector<std::string> edge_types;
                for (const auto& [id, et] : tg->edge_types)
                    edge_types.push_back(id);
                const std::string& et = rng.pick(edge_types);
                std::vector<std::string> sources, targets;
                for (const auto& [id, t] : g.nodes) {
                    if (t == tg->edge_types.at(et).src)
                        sources.push_back(id);
                    if (t == tg->edge_types.at(et).tar)
                        targets.push_back(id);
                }
                if (sources.empty() || targets.empty())
                    continue;
                g.edges.emplace("f" + std::to_string(fresh++), Edge{et, rng.pick(sources), rng.pick(targets)});
            }
        }
        return std::make_shared<const TypedGraph>(std::move(g));
    }

    static GraphMorphism embed(GraphPtr from, GraphPtr into) {
        GraphMorphism m;
        m.domain = std::move(from);
        m.codomain = std::move(into);
        for (const auto& [id, t] : m.domain->nodes)
            m.node_map.emplace(id, id);
        for (const auto& [id, e] : m.domain->edges)
            m.edge_map.emplace(id, id);
        return m;
    }

    GraphCondition operator()(const GraphPtr& root, int depth) {
        int roll = depth == 0 ? rng.next(0, 1) : rng.next(0, 9);
        switch (roll) {
        case 0:
            return make_true(root);
        case 1:
            return make_false(root);
        case 2:
        case 3:
        case 4: {
            GraphPtr target = extend(root);
            GraphCondition body = (*this)(target, depth - 1);
            GraphMorphism step = embed(root, target);
            return roll == 4 ? make_forall(std::move(step), std::move(body))
                             : make_exists(std::move(step), std::move(body));
        }
        case 5:
            return make_not((*this)(root, depth - 1));
        case 6:
        case 7:
        case 8: {
            int arity = rng.next(0, 3);
            std::vector<GraphCondition> children;
            for (int i = 0; i < arity; ++i)
                children.push_back((*this)(root, depth - 1));
            return roll == 8 ? make_or(root, std::move(children)) : make_and(root, std::move(children));
        }
        default: {
            GraphCondition p = (*this)(root, depth - 1);
            GraphCondition q = (*this)(root, depth - 1);
            return make_implies(std::move(p), std::move(q));
        }
        }
    }
};

} // namespace ngc::testing
