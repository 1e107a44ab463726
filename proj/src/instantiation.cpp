#include <ngc/instantiation.hpp>

#include <stdexcept>
#include <utility>

namespace ngc {

bool instantiation_equal(const Instantiation& a, const Instantiation& b) {
    return morphism_equal(a.iso, b.iso) && subgraph_equal(a.target, b.target) &&
           subgraph_equal(a.host, b.host);
}

bool host_is_container(const Instantiation& mu) {
    return mu.host.container && subgraph_equal(mu.host, full_subgraph(mu.host.container));
}

ValidationReport validate_instantiation(const Instantiation& mu) {
    ValidationReport report;
    report.merge(validate_subgraph(mu.target));
    report.merge(validate_subgraph(mu.host));
    if (!report.ok())
        return report;
    if (!graph_equal(mu.target.container, mu.host.container)) {
        report.add("instantiation: target and host live in different containers");
        return report;
    }
    if (!is_subgraph(mu.target, mu.host))
        report.add("instantiation: target is not inside the host");
    report.merge(validate_morphism(mu.iso));
    if (!report.ok())
        return report;
    if (!is_bijective(mu.iso))
        report.add("instantiation: iso is not bijective");
    if (!graph_equal(*mu.iso.codomain, materialize(mu.target)))
        report.add("instantiation: iso codomain is not the target subgraph");
    return report;
}

std::vector<Instantiation> enumerate_instantiations(const GraphPtr& c, const SubgraphRef& host) {
    GraphPtr host_graph = materialize_ptr(host);
    std::vector<Instantiation> out;
    for (const auto& q : enumerate_injective_morphisms(c, host_graph)) {
        auto fact = image_factorize(q, host);
        out.push_back(Instantiation{std::move(fact.iso), std::move(fact.image), host});
    }
    return out;
}

Instantiation extend_to_container(const Instantiation& mu) {
    return Instantiation{mu.iso, mu.target, full_subgraph(mu.target.container)};
}

std::optional<Inclusion> instantiate_morphism(const GraphMorphism& a, const Instantiation& mu0,
                                              const Instantiation& mu1) {
    if (!graph_equal(a.domain, mu0.iso.domain) || !graph_equal(a.codomain, mu1.iso.domain))
        throw std::invalid_argument("instantiate_morphism: morphism endpoints do not match the instantiations");
    if (!graph_equal(mu0.target.container, mu1.target.container))
        throw std::invalid_argument("instantiate_morphism: instantiations live in different containers");
    // The diagram commutes iff mu1's iso restricted along a equals mu0's iso.
    for (const auto& [x, y] : mu0.iso.node_map) {
        if (mu1.iso.node_map.at(a.node_map.at(x)) != y)
            return std::nullopt;
    }
    for (const auto& [x, y] : mu0.iso.edge_map) {
        if (mu1.iso.edge_map.at(a.edge_map.at(x)) != y)
            return std::nullopt;
    }
    if (!is_subgraph(mu0.target, mu1.target))
        return std::nullopt;
    return make_inclusion(mu0.target, mu1.target);
}

std::vector<MorphismInstantiation> enumerate_morphism_instantiations(const GraphMorphism& a,
                                                                     const Instantiation& mu0) {
    if (!is_injective(a))
        throw std::invalid_argument("enumerate_morphism_instantiations: morphism is not injective");
    if (!graph_equal(a.domain, mu0.iso.domain))
        throw std::invalid_argument("enumerate_morphism_instantiations: morphism domain differs from the instantiated pattern");

    // Forcing q after a to equal mu0's iso makes every enumerated q restrict
    // to exactly mu0, so no post-filtering is needed.
    ForcedAssignment forced;
    for (const auto& [x, img] : a.node_map)
        forced.node_map[img] = mu0.iso.node_map.at(x);
    for (const auto& [x, img] : a.edge_map)
        forced.edge_map[img] = mu0.iso.edge_map.at(x);

    GraphPtr host_graph = materialize_ptr(mu0.host);
    std::vector<MorphismInstantiation> out;
    for (const auto& q : enumerate_injective_morphisms(a.codomain, host_graph, forced)) {
        auto fact = image_factorize(q, mu0.host);
        Instantiation mu1{std::move(fact.iso), std::move(fact.image), mu0.host};
        out.push_back(MorphismInstantiation{make_inclusion(mu0.target, mu1.target), std::move(mu1)});
    }
    return out;
}

} // namespace ngc
