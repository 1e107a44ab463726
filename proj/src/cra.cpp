#include <ngc/cra.hpp>

#include <set>
#include <stdexcept>

namespace ngc {

std::size_t resolved_class_count(const CraInstance& instance) {
    if (instance.class_count > 0)
        return instance.class_count;
    return instance.methods.size() + instance.attributes.size();
}

namespace {

std::string class_name(std::size_t i) {
    return "C" + std::to_string(i + 1);
}

bool well_formed_id(const std::string& id) {
    return !id.empty() && id.find_first_of(",()") == std::string::npos;
}

} // namespace

ValidationReport validate_instance(const CraInstance& instance) {
    ValidationReport report;
    std::set<std::string> features;
    std::set<std::string> classes;
    for (std::size_t i = 0; i < resolved_class_count(instance); ++i)
        classes.insert(class_name(i));
    auto check_feature = [&](const std::string& id, const char* kind) {
        if (!well_formed_id(id))
            report.add(std::string(kind) + " '" + id + "': IDs must be nonempty and free of ',', '(', ')'");
        if (!features.insert(id).second)
            report.add(std::string(kind) + " '" + id + "': duplicate feature ID");
        if (classes.count(id))
            report.add(std::string(kind) + " '" + id + "': collides with a generated class name");
    };
    for (const auto& m : instance.methods)
        check_feature(m, "method");
    for (const auto& a : instance.attributes)
        check_feature(a, "attribute");

    std::set<std::string> methods(instance.methods.begin(), instance.methods.end());
    std::set<std::string> attributes(instance.attributes.begin(), instance.attributes.end());
    for (const auto& [from, to] : instance.functional_deps) {
        if (!methods.count(from))
            report.add("functional dep: unknown method '" + from + "'");
        if (!methods.count(to))
            report.add("functional dep: unknown method '" + to + "'");
    }
    for (const auto& [from, to] : instance.data_deps) {
        if (!methods.count(from))
            report.add("data dep: unknown method '" + from + "'");
        if (!attributes.count(to))
            report.add("data dep: unknown attribute '" + to + "'");
    }
    return report;
}

TypeGraphPtr cra_type_graph() {
    static const TypeGraphPtr tg = [] {
        TypeGraph g;
        g.node_types = {"Class", "Method", "Attribute"};
        g.edge_types["encapsulatesMethod"] = EdgeType{"Class", "Method"};
        g.edge_types["encapsulatesAttribute"] = EdgeType{"Class", "Attribute"};
        g.edge_types["functionalDep"] = EdgeType{"Method", "Method"};
        g.edge_types["dataDep"] = EdgeType{"Method", "Attribute"};
        return std::make_shared<const TypeGraph>(std::move(g));
    }();
    return tg;
}

CraContainer build_cra_container(const CraInstance& instance) {
    auto report = validate_instance(instance);
    if (!report.ok())
        throw std::invalid_argument("build_cra_container: " + report.violations.front());

    TypedGraph t;
    t.type_graph = cra_type_graph();
    t.name = "T";
    std::vector<std::string> problem_nodes;
    std::vector<std::string> problem_edges;
    for (const auto& m : instance.methods) {
        t.nodes[m] = "Method";
        problem_nodes.push_back(m);
    }
    for (const auto& a : instance.attributes) {
        t.nodes[a] = "Attribute";
        problem_nodes.push_back(a);
    }
    for (const auto& [from, to] : instance.functional_deps) {
        std::string id = "fd(" + from + "," + to + ")";
        t.edges[id] = Edge{"functionalDep", from, to};
        problem_edges.push_back(id);
    }
    for (const auto& [from, to] : instance.data_deps) {
        std::string id = "dd(" + from + "," + to + ")";
        t.edges[id] = Edge{"dataDep", from, to};
        problem_edges.push_back(id);
    }
    for (std::size_t i = 0; i < resolved_class_count(instance); ++i) {
        std::string c = class_name(i);
        t.nodes[c] = "Class";
        for (const auto& m : instance.methods)
            t.edges["enc(" + c + "," + m + ")"] = Edge{"encapsulatesMethod", c, m};
        for (const auto& a : instance.attributes)
            t.edges["enc(" + c + "," + a + ")"] = Edge{"encapsulatesAttribute", c, a};
    }

    CraContainer out;
    out.container = std::make_shared<const TypedGraph>(std::move(t));
    out.problem_part = make_subgraph(out.container, std::move(problem_nodes), std::move(problem_edges));
    return out;
}

namespace {

GraphPtr shared_empty_graph() {
    static const GraphPtr g = std::make_shared<const TypedGraph>(empty_graph(cra_type_graph()));
    return g;
}

GraphMorphism from_empty(GraphPtr codomain) {
    GraphMorphism f;
    f.domain = shared_empty_graph();
    f.codomain = std::move(codomain);
    return f;
}

// Inclusion-shaped morphism: identity maps on the domain's elements.
GraphMorphism embed(GraphPtr domain, GraphPtr codomain) {
    GraphMorphism f;
    f.domain = std::move(domain);
    f.codomain = std::move(codomain);
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

// Every occurrence of `premise` extends to an occurrence of `extension`.
GraphCondition every_occurrence_extends(GraphPtr premise, GraphPtr extension) {
    GraphCondition extends = make_exists(embed(premise, extension), make_true(extension));
    return make_not(make_exists(from_empty(std::move(premise)), make_not(std::move(extends))));
}

GraphCondition lower_bound_constraint(const std::string& feature_type, const std::string& enc_type) {
    TypedGraph feature;
    feature.type_graph = cra_type_graph();
    feature.nodes["m"] = feature_type;
    auto feature_ptr = std::make_shared<const TypedGraph>(feature);

    TypedGraph assigned = feature;
    assigned.nodes["c"] = "Class";
    assigned.edges["e"] = Edge{enc_type, "c", "m"};
    auto assigned_ptr = std::make_shared<const TypedGraph>(std::move(assigned));

    return every_occurrence_extends(feature_ptr, assigned_ptr);
}

} // namespace

std::vector<NamedConstraint> builtin_constraints(bool with_attribute_lower_bound) {
    std::vector<NamedConstraint> out;

    out.push_back(NamedConstraint{
        "method-lower-bound", lower_bound_constraint("Method", "encapsulatesMethod")});

    {
        // A method encapsulated by two distinct classes must not occur.
        TypedGraph doubly;
        doubly.type_graph = cra_type_graph();
        doubly.nodes["m"] = "Method";
        doubly.nodes["c1"] = "Class";
        doubly.nodes["c2"] = "Class";
        doubly.edges["e1"] = Edge{"encapsulatesMethod", "c1", "m"};
        doubly.edges["e2"] = Edge{"encapsulatesMethod", "c2", "m"};
        auto doubly_ptr = std::make_shared<const TypedGraph>(std::move(doubly));
        out.push_back(NamedConstraint{
            "method-upper-bound",
            make_not(make_exists(from_empty(doubly_ptr), make_true(doubly_ptr)))});
    }

    {
        // A used attribute's class must also hold the using method.
        TypedGraph usage;
        usage.type_graph = cra_type_graph();
        usage.nodes["m"] = "Method";
        usage.nodes["a"] = "Attribute";
        usage.nodes["c"] = "Class";
        usage.edges["d"] = Edge{"dataDep", "m", "a"};
        usage.edges["ea"] = Edge{"encapsulatesAttribute", "c", "a"};
        auto usage_ptr = std::make_shared<const TypedGraph>(usage);

        TypedGraph shared = usage;
        shared.edges["em"] = Edge{"encapsulatesMethod", "c", "m"};
        auto shared_ptr = std::make_shared<const TypedGraph>(std::move(shared));

        out.push_back(NamedConstraint{
            "private-attribute-usage", every_occurrence_extends(usage_ptr, shared_ptr)});
    }

    if (with_attribute_lower_bound)
        out.push_back(NamedConstraint{
            "attribute-lower-bound", lower_bound_constraint("Attribute", "encapsulatesAttribute")});

    return out;
}

} // namespace ngc
