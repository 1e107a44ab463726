// Occurrences of pattern graphs as subgraphs: bijection with injections,
// restriction along morphisms, and the forced-extension enumeration.

#include <doctest.h>

#include <ngc/instantiation.hpp>

#include "support.hpp"

using namespace ngc;
using namespace ngc::testing;

namespace {

GraphPtr fixture_container() {
    return make_graph(two_type_graph(),
                      {{"v0", "A"}, {"v1", "A"}, {"v2", "B"}, {"v3", "B"}},
                      {{"e0", "ab", "v0", "v2"}, {"e1", "ab", "v1", "v2"},
                       {"e2", "ab", "v0", "v3"}},
                      "T");
}

} // namespace

TEST_CASE("instantiations are in bijection with injections into the host") {
    auto t = fixture_container();
    auto pattern = make_graph(two_type_graph(), {{"x", "A"}, {"y", "B"}}, {{"d", "ab", "x", "y"}});

    for (const auto& host : all_subgraphs(t)) {
        auto injections = enumerate_injective_morphisms(pattern, materialize_ptr(host));
        auto occurrences = enumerate_instantiations(pattern, host);
        REQUIRE(occurrences.size() == injections.size());
        for (std::size_t i = 0; i < occurrences.size(); ++i) {
            const Instantiation& mu = occurrences[i];
            CHECK(validate_instantiation(mu).ok());
            CHECK(is_bijective(mu.iso));
            CHECK(is_subgraph(mu.target, mu.host));
            // The iso composed with the target inclusion is the injection.
            for (const auto& [x, y] : injections[i].node_map)
                CHECK(mu.iso.node_map.at(x) == y);
            for (const auto& [x, y] : injections[i].edge_map)
                CHECK(mu.iso.edge_map.at(x) == y);
        }
    }
}

TEST_CASE("frozen occurrence count on the full fixture") {
    auto t = fixture_container();
    auto pattern = make_graph(two_type_graph(), {{"x", "A"}, {"y", "B"}}, {{"d", "ab", "x", "y"}});
    auto occurrences = enumerate_instantiations(pattern, full_subgraph(t));
    CHECK(occurrences.size() == 3); // one per ab edge
    for (const auto& mu : occurrences)
        CHECK(host_is_container(mu));
}

TEST_CASE("extending an occurrence to the container keeps the target") {
    auto t = fixture_container();
    auto pattern = make_graph(two_type_graph(), {{"x", "A"}}, {});
    SubgraphRef host = make_subgraph(t, {"v0", "v2"}, {"e0"});
    auto occurrences = enumerate_instantiations(pattern, host);
    REQUIRE(occurrences.size() == 1);
    Instantiation wide = extend_to_container(occurrences.front());
    CHECK(host_is_container(wide));
    CHECK(subgraph_equal(wide.target, occurrences.front().target));
    CHECK(validate_instantiation(wide).ok());
}

TEST_CASE("restriction along a morphism gives the unique connecting inclusion") {
    auto t = fixture_container();
    auto small = make_graph(two_type_graph(), {{"x", "A"}}, {});
    auto large = make_graph(two_type_graph(), {{"x", "A"}, {"y", "B"}}, {{"d", "ab", "x", "y"}});
    GraphMorphism a;
    a.domain = small;
    a.codomain = large;
    a.node_map = {{"x", "x"}};

    SubgraphRef top = full_subgraph(t);
    auto small_occurrences = enumerate_instantiations(small, top);
    auto large_occurrences = enumerate_instantiations(large, top);
    REQUIRE(small_occurrences.size() == 2);
    REQUIRE(large_occurrences.size() == 3);

    for (const auto& mu1 : large_occurrences) {
        int hits = 0;
        for (const auto& mu0 : small_occurrences) {
            auto b = instantiate_morphism(a, mu0, mu1);
            if (!b)
                continue;
            ++hits;
            // b connects the two occurrences: iso1(a(x)) equals iso0(x)
            // carried through the inclusion, which is the identity on ids.
            CHECK(subgraph_equal(b->domain, mu0.target));
            CHECK(subgraph_equal(b->codomain, mu1.target));
            CHECK(mu1.iso.node_map.at("x") == mu0.iso.node_map.at("x"));
        }
        CHECK(hits == 1); // exactly one restriction per larger occurrence
    }
}

TEST_CASE("restriction fails when the occurrences do not line up") {
    auto t = fixture_container();
    auto small = make_graph(two_type_graph(), {{"x", "A"}}, {});
    auto large = make_graph(two_type_graph(), {{"x", "A"}, {"y", "B"}}, {{"d", "ab", "x", "y"}});
    GraphMorphism a;
    a.domain = small;
    a.codomain = large;
    a.node_map = {{"x", "x"}};

    SubgraphRef top = full_subgraph(t);
    auto small_occurrences = enumerate_instantiations(small, top);
    auto large_occurrences = enumerate_instantiations(large, top);
    // v1 only sits under e1; occurrences of the edge pattern at v0 restrict
    // to the occurrence at v0, never to the one at v1.
    int mismatches = 0;
    for (const auto& mu1 : large_occurrences)
        for (const auto& mu0 : small_occurrences)
            if (!instantiate_morphism(a, mu0, mu1))
                ++mismatches;
    CHECK(mismatches == 3); // 2*3 pairs, one hit per large occurrence
}

TEST_CASE("morphism instantiations enumerate exactly the extensions") {
    auto t = fixture_container();
    auto small = make_graph(two_type_graph(), {{"x", "A"}}, {});
    auto large = make_graph(two_type_graph(), {{"x", "A"}, {"y", "B"}}, {{"d", "ab", "x", "y"}});
    GraphMorphism a;
    a.domain = small;
    a.codomain = large;
    a.node_map = {{"x", "x"}};

    SubgraphRef top = full_subgraph(t);
    for (const auto& mu0 : enumerate_instantiations(small, top)) {
        auto extensions = enumerate_morphism_instantiations(a, mu0);
        // Cross-check against filtering all large occurrences.
        std::size_t expected = 0;
        for (const auto& mu1 : enumerate_instantiations(large, top))
            if (instantiate_morphism(a, mu0, mu1))
                ++expected;
        CHECK(extensions.size() == expected);
        for (const auto& ext : extensions) {
            CHECK(subgraph_equal(ext.incl.domain, mu0.target));
            CHECK(subgraph_equal(ext.incl.codomain, ext.target.target));
            CHECK(validate_instantiation(ext.target).ok());
            auto direct = instantiate_morphism(a, mu0, ext.target);
            REQUIRE(direct.has_value());
            CHECK(inclusion_equal(*direct, ext.incl));
        }
    }
    // The occurrence at v0 extends along both e0 and e2; the one at v1 only
    // along e1.
    auto at_v0 = enumerate_instantiations(small, top).front();
    CHECK(enumerate_morphism_instantiations(a, at_v0).size() == 2);
}
