#include <ngc/condition.hpp>

#include <string>
#include <type_traits>

namespace ngc {

namespace {

template <typename C>
bool condition_equal_impl(const C& a, const C& b) {
    if (a.op != b.op || !object_equal(a.root, b.root))
        return false;
    if (a.morphism.has_value() != b.morphism.has_value())
        return false;
    if (a.morphism.has_value()) {
        if constexpr (std::is_same_v<typename C::Morphism, GraphMorphism>) {
            if (!morphism_equal(*a.morphism, *b.morphism))
                return false;
        } else {
            if (!inclusion_equal(*a.morphism, *b.morphism))
                return false;
        }
    }
    if (a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!condition_equal_impl(a.children[i], b.children[i]))
            return false;
    return true;
}

ValidationReport check_morphism(const GraphMorphism& m) {
    ValidationReport report = validate_morphism(m);
    if (report.ok() && !is_injective(m))
        report.add("morphism is not injective");
    return report;
}

ValidationReport check_morphism(const Inclusion& m) {
    ValidationReport report;
    report.merge(validate_subgraph(m.domain));
    report.merge(validate_subgraph(m.codomain));
    if (!report.ok())
        return report;
    if (!graph_equal(m.domain.container, m.codomain.container))
        report.add("inclusion endpoints live in different containers");
    else if (!is_subgraph(m.domain, m.codomain))
        report.add("inclusion domain is not a subgraph of its codomain");
    return report;
}

ValidationReport check_object(const GraphPtr& g) {
    if (!g) {
        ValidationReport report;
        report.add("missing root graph");
        return report;
    }
    return validate_typed_graph(*g);
}

ValidationReport check_object(const SubgraphRef& s) {
    return validate_subgraph(s);
}

template <typename C>
void validate_impl(const C& c, const std::string& path, ValidationReport& report) {
    auto at = [&](const std::string& msg) { report.add(path + ": " + msg); };

    auto object_report = check_object(c.root);
    for (const auto& v : object_report.violations)
        at("root: " + v);

    bool needs_morphism = c.op == CondOp::Exists || c.op == CondOp::Forall;
    if (needs_morphism != c.morphism.has_value())
        at(needs_morphism ? "missing morphism" : "unexpected morphism");

    std::size_t arity = c.children.size();
    switch (c.op) {
    case CondOp::True:
    case CondOp::False:
        if (arity != 0)
            at("constant with children");
        break;
    case CondOp::Not:
        if (arity != 1)
            at("negation needs exactly one child");
        break;
    case CondOp::Exists:
    case CondOp::Forall:
        if (arity != 1)
            at("quantifier needs exactly one child");
        break;
    case CondOp::Implies:
        if (arity != 2)
            at("implication needs exactly two children");
        break;
    case CondOp::And:
    case CondOp::Or:
        break;
    }

    if (needs_morphism && c.morphism.has_value()) {
        auto morphism_report = check_morphism(*c.morphism);
        for (const auto& v : morphism_report.violations)
            at("morphism: " + v);
        if (morphism_report.ok()) {
            if (!object_equal(c.root, morphism_domain(*c.morphism)))
                at("root differs from the morphism's domain");
            if (arity == 1 && !object_equal(c.children.front().root, morphism_codomain(*c.morphism)))
                at("body root differs from the morphism's codomain");
        }
    } else if (!needs_morphism) {
        for (std::size_t i = 0; i < c.children.size(); ++i)
            if (!object_equal(c.children[i].root, c.root))
                at("child " + std::to_string(i) + " has a different root");
    }

    for (std::size_t i = 0; i < c.children.size(); ++i)
        validate_impl(c.children[i], path + "/" + std::to_string(i), report);
}

} // namespace

bool condition_equal(const GraphCondition& a, const GraphCondition& b) {
    return condition_equal_impl(a, b);
}

bool condition_equal(const SubCondition& a, const SubCondition& b) {
    return condition_equal_impl(a, b);
}

ValidationReport validate_condition(const GraphCondition& c) {
    ValidationReport report;
    validate_impl(c, "condition", report);
    return report;
}

ValidationReport validate_condition(const SubCondition& c) {
    ValidationReport report;
    validate_impl(c, "condition", report);
    return report;
}

} // namespace ngc
