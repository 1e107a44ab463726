#include <ngc/json_io.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ngc {

namespace {

[[noreturn]] void bad(const std::string& message) {
    throw std::invalid_argument(message);
}

std::string op_name(CondOp op) {
    switch (op) {
    case CondOp::True:
        return "true";
    case CondOp::Exists:
        return "exists";
    case CondOp::Not:
        return "not";
    case CondOp::And:
        return "and";
    case CondOp::Or:
        return "or";
    case CondOp::False:
        return "false";
    case CondOp::Forall:
        return "forall";
    case CondOp::Implies:
        return "implies";
    }
    return "true";
}

CondOp op_from_name(const std::string& name) {
    if (name == "true")
        return CondOp::True;
    if (name == "exists")
        return CondOp::Exists;
    if (name == "not")
        return CondOp::Not;
    if (name == "and")
        return CondOp::And;
    if (name == "or")
        return CondOp::Or;
    if (name == "false")
        return CondOp::False;
    if (name == "forall")
        return CondOp::Forall;
    if (name == "implies")
        return CondOp::Implies;
    bad("unknown condition operator '" + name + "'");
}

Json string_map_to_json(const std::map<std::string, std::string>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m)
        j[k] = v;
    return j;
}

std::map<std::string, std::string> string_map_from_json(const Json& j) {
    std::map<std::string, std::string> m;
    for (auto it = j.begin(); it != j.end(); ++it)
        m[it.key()] = it.value().get<std::string>();
    return m;
}

// Graph body without the type graph, shared by standalone and nested graphs.
Json graph_body_to_json(const TypedGraph& g) {
    Json nodes = Json::array();
    for (const auto& [id, type] : g.nodes)
        nodes.push_back(Json{{"id", id}, {"type", type}});
    Json edges = Json::array();
    for (const auto& [id, e] : g.edges)
        edges.push_back(Json{{"id", id}, {"type", e.type}, {"src", e.src}, {"tar", e.tar}});
    return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

void graph_body_from_json(const Json& j, TypedGraph& g) {
    for (const auto& n : j.value("nodes", Json::array())) {
        std::string id = n.at("id").get<std::string>();
        if (!g.nodes.emplace(id, n.at("type").get<std::string>()).second)
            bad("duplicate node ID '" + id + "'");
    }
    for (const auto& e : j.value("edges", Json::array())) {
        std::string id = e.at("id").get<std::string>();
        Edge edge{e.at("type").get<std::string>(), e.at("src").get<std::string>(),
                  e.at("tar").get<std::string>()};
        if (!g.edges.emplace(id, std::move(edge)).second)
            bad("duplicate edge ID '" + id + "'");
    }
}

// ID lists of a subgraph without its container reference.
Json subgraph_body_to_json(const SubgraphRef& s) {
    return Json{{"nodes", s.node_ids}, {"edges", s.edge_ids}};
}

SubgraphRef subgraph_body_from_json(const Json& j, const GraphPtr& container) {
    SubgraphRef s;
    s.container = container;
    s.node_ids = j.value("nodes", std::vector<std::string>{});
    s.edge_ids = j.value("edges", std::vector<std::string>{});
    std::sort(s.node_ids.begin(), s.node_ids.end());
    s.node_ids.erase(std::unique(s.node_ids.begin(), s.node_ids.end()), s.node_ids.end());
    std::sort(s.edge_ids.begin(), s.edge_ids.end());
    s.edge_ids.erase(std::unique(s.edge_ids.begin(), s.edge_ids.end()), s.edge_ids.end());
    return s;
}

} // namespace

Json to_json(const TypeGraph& tg) {
    Json nodes = Json::array();
    for (const auto& id : tg.node_types)
        nodes.push_back(id);
    Json edges = Json::array();
    for (const auto& [id, et] : tg.edge_types)
        edges.push_back(Json{{"id", id}, {"src", et.src}, {"tar", et.tar}});
    return Json{{"nodeTypes", std::move(nodes)}, {"edgeTypes", std::move(edges)}};
}

TypeGraph type_graph_from_json(const Json& j) {
    TypeGraph tg;
    for (const auto& id : j.value("nodeTypes", Json::array()))
        tg.node_types.insert(id.get<std::string>());
    for (const auto& e : j.value("edgeTypes", Json::array())) {
        std::string id = e.at("id").get<std::string>();
        EdgeType et{e.at("src").get<std::string>(), e.at("tar").get<std::string>()};
        if (!tg.edge_types.emplace(id, std::move(et)).second)
            bad("duplicate edge type ID '" + id + "'");
    }
    return tg;
}

Json to_json(const TypedGraph& g) {
    Json j = graph_body_to_json(g);
    if (!g.name.empty())
        j["name"] = g.name;
    if (g.type_graph)
        j["typegraph"] = to_json(*g.type_graph);
    return j;
}

TypedGraph graph_from_json(const Json& j) {
    if (!j.contains("typegraph"))
        bad("graph file lacks a 'typegraph' section");
    return graph_from_json(j, std::make_shared<const TypeGraph>(type_graph_from_json(j.at("typegraph"))));
}

TypedGraph graph_from_json(const Json& j, TypeGraphPtr tg) {
    TypedGraph g;
    g.type_graph = std::move(tg);
    g.name = j.value("name", "");
    graph_body_from_json(j, g);
    return g;
}

Json to_json(const SubgraphRef& s) {
    Json j = subgraph_body_to_json(s);
    j["container"] = s.container ? s.container->name : "";
    return j;
}

SubgraphRef subgraph_from_json(const Json& j, GraphPtr container) {
    if (j.contains("container") && container) {
        std::string named = j.at("container").get<std::string>();
        if (!named.empty() && !container->name.empty() && named != container->name)
            bad("subgraph names container '" + named + "' but the loaded container is '" +
                container->name + "'");
    }
    return subgraph_body_from_json(j, container);
}

namespace {

Json tg_condition_to_json(const GraphCondition& c) {
    Json j;
    j["op"] = op_name(c.op);
    if (c.morphism) {
        j["codomain"] = graph_body_to_json(*c.morphism->codomain);
        j["nodeMap"] = string_map_to_json(c.morphism->node_map);
        j["edgeMap"] = string_map_to_json(c.morphism->edge_map);
    }
    if (c.op == CondOp::Not || c.op == CondOp::Exists || c.op == CondOp::Forall) {
        j["child"] = tg_condition_to_json(c.children.front());
    } else if (!c.children.empty() || c.op == CondOp::And || c.op == CondOp::Or ||
               c.op == CondOp::Implies) {
        Json children = Json::array();
        for (const auto& child : c.children)
            children.push_back(tg_condition_to_json(child));
        j["children"] = std::move(children);
    }
    return j;
}

GraphCondition tg_condition_from_json(const Json& j, const GraphPtr& root, const TypeGraphPtr& tg) {
    GraphCondition c;
    c.op = op_from_name(j.at("op").get<std::string>());
    c.root = root;
    GraphPtr child_root = root;
    if (c.op == CondOp::Exists || c.op == CondOp::Forall) {
        if (!j.contains("codomain"))
            bad("quantifier lacks a 'codomain' graph");
        auto codomain = std::make_shared<const TypedGraph>(graph_from_json(j.at("codomain"), tg));
        GraphMorphism m;
        m.domain = root;
        m.codomain = codomain;
        // Unlisted domain elements map to their own ID.
        for (const auto& [id, type] : root->nodes) {
            (void)type;
            m.node_map[id] = id;
        }
        for (const auto& [id, e] : root->edges) {
            (void)e;
            m.edge_map[id] = id;
        }
        if (j.contains("nodeMap"))
            for (auto& [k, v] : string_map_from_json(j.at("nodeMap")))
                m.node_map[k] = v;
        if (j.contains("edgeMap"))
            for (auto& [k, v] : string_map_from_json(j.at("edgeMap")))
                m.edge_map[k] = v;
        c.morphism = std::move(m);
        child_root = codomain;
    }
    if (j.contains("child"))
        c.children.push_back(tg_condition_from_json(j.at("child"), child_root, tg));
    for (const auto& child : j.value("children", Json::array()))
        c.children.push_back(tg_condition_from_json(child, child_root, tg));
    return c;
}

Json sub_condition_to_json(const SubCondition& c) {
    Json j;
    j["op"] = op_name(c.op);
    if (c.morphism)
        j["codomain"] = subgraph_body_to_json(c.morphism->codomain);
    if (c.op == CondOp::Not || c.op == CondOp::Exists || c.op == CondOp::Forall) {
        j["child"] = sub_condition_to_json(c.children.front());
    } else if (!c.children.empty() || c.op == CondOp::And || c.op == CondOp::Or ||
               c.op == CondOp::Implies) {
        Json children = Json::array();
        for (const auto& child : c.children)
            children.push_back(sub_condition_to_json(child));
        j["children"] = std::move(children);
    }
    return j;
}

SubCondition sub_condition_from_json_node(const Json& j, const SubgraphRef& root,
                                          const GraphPtr& container) {
    SubCondition c;
    c.op = op_from_name(j.at("op").get<std::string>());
    c.root = root;
    SubgraphRef child_root = root;
    if (c.op == CondOp::Exists || c.op == CondOp::Forall) {
        if (!j.contains("codomain"))
            bad("quantifier lacks a 'codomain' subgraph");
        SubgraphRef codomain = subgraph_body_from_json(j.at("codomain"), container);
        c.morphism = Inclusion{root, codomain};
        child_root = std::move(codomain);
    }
    if (j.contains("child"))
        c.children.push_back(sub_condition_from_json_node(j.at("child"), child_root, container));
    for (const auto& child : j.value("children", Json::array()))
        c.children.push_back(sub_condition_from_json_node(child, child_root, container));
    return c;
}

} // namespace

Json to_json(const GraphCondition& c) {
    Json j;
    j["category"] = "tg";
    if (c.root) {
        j["root"] = graph_body_to_json(*c.root);
        if (c.root->type_graph)
            j["typegraph"] = to_json(*c.root->type_graph);
    }
    j["condition"] = tg_condition_to_json(c);
    return j;
}

GraphCondition graph_condition_from_json(const Json& j) {
    if (j.value("category", "tg") != "tg")
        bad("expected a typed-graph condition file (category 'tg')");
    if (!j.contains("typegraph"))
        bad("condition file lacks a 'typegraph' section");
    auto tg = std::make_shared<const TypeGraph>(type_graph_from_json(j.at("typegraph")));
    auto root = std::make_shared<const TypedGraph>(
        graph_from_json(j.value("root", Json::object()), tg));
    return tg_condition_from_json(j.at("condition"), root, tg);
}

Json to_json(const SubCondition& c) {
    Json j;
    j["category"] = "sub";
    j["container"] = c.root.container ? c.root.container->name : "";
    j["root"] = subgraph_body_to_json(c.root);
    j["condition"] = sub_condition_to_json(c);
    return j;
}

SubCondition sub_condition_from_json(const Json& j, GraphPtr container) {
    if (j.value("category", "sub") != "sub")
        bad("expected a subgraph condition file (category 'sub')");
    if (j.contains("container") && container) {
        std::string named = j.at("container").get<std::string>();
        if (!named.empty() && !container->name.empty() && named != container->name)
            bad("condition names container '" + named + "' but the loaded container is '" +
                container->name + "'");
    }
    SubgraphRef root = subgraph_body_from_json(j.value("root", Json::object()), container);
    return sub_condition_from_json_node(j.at("condition"), root, container);
}

Json to_json(const NormalizeResult& r) {
    Json j;
    j["container"] = r.nf.root.container ? r.nf.root.container->name : "";
    j["root"] = subgraph_body_to_json(r.nf.root);
    j["form"] = r.nf.form == NormalForm::Cnf ? "cnf" : "dnf";
    Json clauses = Json::array();
    for (const auto& cls : r.classes) {
        Json entry;
        switch (cls.kind) {
        case ClauseKind::Trivial:
            entry["class"] = "trivial";
            entry["value"] = cls.truth_value;
            break;
        case ClauseKind::PurelyPositive:
            entry["class"] = "purely-positive";
            break;
        case ClauseKind::PurelyNegative:
            entry["class"] = "purely-negative";
            break;
        case ClauseKind::Mixed:
            entry["class"] = "mixed";
            break;
        }
        if (cls.premise)
            entry["premise"] = subgraph_body_to_json(*cls.premise);
        if (cls.kind == ClauseKind::PurelyPositive || cls.kind == ClauseKind::Mixed) {
            Json disjuncts = Json::array();
            for (const auto& d : cls.disjuncts)
                disjuncts.push_back(subgraph_body_to_json(d));
            entry["disjuncts"] = std::move(disjuncts);
        }
        clauses.push_back(std::move(entry));
    }
    j["clauses"] = std::move(clauses);
    return j;
}

Json to_json(const CraInstance& instance) {
    Json j;
    j["methods"] = instance.methods;
    j["attributes"] = instance.attributes;
    Json fdeps = Json::array();
    for (const auto& [from, to] : instance.functional_deps)
        fdeps.push_back(Json::array({from, to}));
    j["functionalDeps"] = std::move(fdeps);
    Json ddeps = Json::array();
    for (const auto& [from, to] : instance.data_deps)
        ddeps.push_back(Json::array({from, to}));
    j["dataDeps"] = std::move(ddeps);
    if (instance.class_count > 0)
        j["classCount"] = instance.class_count;
    return j;
}

CraInstance instance_from_json(const Json& j) {
    CraInstance instance;
    instance.methods = j.value("methods", std::vector<std::string>{});
    instance.attributes = j.value("attributes", std::vector<std::string>{});
    auto read_pairs = [&](const char* key) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& p : j.value(key, Json::array())) {
            if (!p.is_array() || p.size() != 2)
                bad(std::string(key) + ": entries must be [from, to] pairs");
            out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
        return out;
    };
    instance.functional_deps = read_pairs("functionalDeps");
    instance.data_deps = read_pairs("dataDeps");
    if (j.contains("classCount")) {
        auto count = j.at("classCount").get<std::int64_t>();
        if (count < 1)
            bad("classCount must be at least 1");
        instance.class_count = static_cast<std::size_t>(count);
    }
    return instance;
}

std::string pretty(const Json& j) {
    return j.dump(2) + "\n";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        bad("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        bad("cannot parse '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        bad("cannot write '" + path + "'");
    out << content;
}

} // namespace ngc
